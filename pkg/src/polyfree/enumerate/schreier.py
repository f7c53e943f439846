"""Reidemeister-Schreier rewriting from a complete coset table."""
from __future__ import annotations

from ..presentation import Presentation
from ..words import Word, free_reduce, inverse
from .coset import CosetTable


def spanning_tree(t: CosetTable) -> tuple[list[Word], set[tuple[int, int]]]:
    """Coset representatives and tree edges ``(coset, column)``.

    The tree is breadth-first from coset 0, scanning columns in order, so
    on a standardized table it matches the coset numbering.
    """
    n = len(t.table)
    reps: list[Word | None] = [None] * n
    reps[0] = ()
    tree: set[tuple[int, int]] = set()
    order = [0]
    i = 0
    while i < len(order):
        a = order[i]
        for c, b in enumerate(t.table[a]):
            if reps[b] is None:
                x = c // 2 + 1 if c % 2 == 0 else -(c // 2 + 1)
                reps[b] = reps[a] + (x,)
                tree.add((a, c))
                tree.add((b, c ^ 1))
                order.append(b)
        i += 1
    return reps, tree


def schreier_edges(t: CosetTable) -> list[tuple[int, int]]:
    """Non-tree edges ``(coset, generator)``; one Schreier generator each.

    There are index * ngens - (index - 1) of them.
    """
    if not t.complete:
        raise ValueError("Reidemeister-Schreier needs a complete coset table")
    _, tree = spanning_tree(t)
    ngens = t.presentation.ngens
    return [
        (a, g)
        for a in range(len(t.table))
        for g in range(1, ngens + 1)
        if (a, 2 * (g - 1)) not in tree
    ]


def schreier_generators(t: CosetTable) -> dict[tuple[int, int], Word]:
    """Schreier generators as ambient words rep(a) g rep(a.g)^-1."""
    reps, _ = spanning_tree(t)
    return {
        (a, g): free_reduce(reps[a] + (g,) + inverse(reps[t.table[a][2 * (g - 1)]]))
        for a, g in schreier_edges(t)
    }


def rewrite(t: CosetTable, keys: dict[tuple[int, int], int], w, start: int = 0) -> Word:
    """Rewrite ambient word ``w`` read from coset ``start`` in Schreier generators."""
    out = []
    a = start
    for x in w:
        if x > 0:
            b = t.table[a][2 * (x - 1)]
            s = keys.get((a, x))
            if s:
                out.append(s)
        else:
            b = t.table[a][2 * (-x - 1) + 1]
            s = keys.get((b, -x))
            if s:
                out.append(-s)
        a = b
    return free_reduce(out)


def reidemeister_schreier(p: Presentation, t: CosetTable) -> Presentation:
    """Presentation of the subgroup on its Schreier generators y1, y2, ...

    One relator per (coset, relator) pair, in coset-major order; no
    simplification is done here.
    """
    if t.presentation != p:
        raise ValueError("coset table belongs to a different presentation")
    gens = schreier_edges(t)
    keys = {k: i + 1 for i, k in enumerate(gens)}
    rels = [rewrite(t, keys, r, a) for a in range(len(t.table)) for r in p.relators]
    names = tuple(f"y{i + 1}" for i in range(len(gens)))
    return Presentation(names, tuple(rels))
