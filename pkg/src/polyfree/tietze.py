"""Deterministic Tietze simplification.

Moves, in order of preference:

1. drop trivial and duplicate relators (duplicates up to rotation and inversion);
2. a relator of length one kills its generator;
3. a relator of length two in which some generator occurs once defines it;
4. a longer relator in which some generator occurs exactly once defines it,
   accepted only if generators + total relator length does not grow;
5. a proper power u^k where some generator g occurs once in u: replace g by
   a new generator standing for u (so the relator becomes a power of one
   generator), under the same size condition.

Each move costs one unit of budget. Candidates are tried shortest
relator first, then highest generator index, so results are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .presentation import Presentation
from .words import Word, cyclic_reduce, free_reduce, inverse, cyclic_class_key


@dataclass(frozen=True)
class TietzeResult:
    presentation: Presentation
    moves: int
    exhausted: bool
    # images of the original generators as words in the new ones
    images: tuple[Word, ...]


def _substitute(w: Word, gen: int, value: Word) -> list[int]:
    out: list[int] = []
    inv = inverse(value)
    for x in w:
        if x == gen:
            out.extend(value)
        elif x == -gen:
            out.extend(inv)
        else:
            out.append(x)
    return out


def _dedupe(rels: list[Word]) -> list[Word]:
    kept: dict[Word, Word] = {}
    for r in rels:
        if r:
            kept.setdefault(cyclic_class_key(r), r)
    return list(kept.values())


def _definition(rel: Word, gen: int) -> Word:
    """Solve ``rel = 1`` for ``gen``, which occurs exactly once in ``rel``."""
    i = next(k for k, x in enumerate(rel) if abs(x) == gen)
    rest = rel[i + 1:] + rel[:i]
    # rel ~ g^e . rest  =>  g^e = rest^-1
    return inverse(rest) if rel[i] > 0 else rest


def _candidates(rel: Word) -> list[int]:
    counts: dict[int, int] = {}
    for x in rel:
        counts[abs(x)] = counts.get(abs(x), 0) + 1
    return sorted((g for g, c in counts.items() if c == 1), reverse=True)


def _root(rel: Word) -> tuple[Word, int]:
    """Shortest u with rel == u^k."""
    n = len(rel)
    for p in range(1, n // 2 + 1):
        if n % p == 0 and rel[:p] * (n // p) == rel:
            return rel[:p], n // p
    return rel, 1


def _power_move(rels: list[Word], size: int, ngens: int):
    """Find (g, value) turning some relator u^k into a power of g."""
    for r in sorted(rels, key=len):
        u, k = _root(r)
        if k < 2 or len(u) < 2:
            continue
        for g in _candidates(u):
            i = next(j for j, x in enumerate(u) if abs(x) == g)
            v = u[i + 1:] + u[:i]
            # new g stands for g^e v, so old g = (new g) v^-1 or v (new g)^-1
            value = (g,) + inverse(v) if u[i] > 0 else v + (-g,)
            new_rels = [cyclic_reduce(_substitute(s, g, value)) for s in rels]
            if ngens + sum(map(len, new_rels)) <= size:
                return g, value
    return None


def tietze_simplify(p: Presentation, budget: int = 10_000) -> TietzeResult:
    ngens = p.ngens
    alive = list(range(1, ngens + 1))
    # images[g-1] expresses original generator g in surviving generators
    images: list[Word] = [(g,) for g in range(1, ngens + 1)]
    rels = _dedupe([cyclic_reduce(r) for r in p.relators])
    moves = 0
    exhausted = False

    def eliminate(gen: int, value: Word) -> None:
        nonlocal rels
        for k, img in enumerate(images):
            images[k] = free_reduce(_substitute(img, gen, value))
        rels = _dedupe([cyclic_reduce(_substitute(r, gen, value)) for r in rels])
        alive.remove(gen)

    def rename(gen: int, value: Word) -> None:
        nonlocal rels
        for k, img in enumerate(images):
            images[k] = free_reduce(_substitute(img, gen, value))
        rels = _dedupe([cyclic_reduce(_substitute(r, gen, value)) for r in rels])

    while True:
        if moves >= budget:
            exhausted = True
            break
        size = len(alive) + sum(len(r) for r in rels)
        move = None
        for r in sorted(rels, key=len):
            for g in _candidates(r):
                value = _definition(r, g)
                if len(r) <= 2:
                    move = (g, value)
                    break
                others = sum(len(s) for s in rels if s is not r)
                uses = sum(1 for s in rels if s is not r for x in s if abs(x) == g)
                new_size = (len(alive) - 1) + others + uses * (len(value) - 1)
                if new_size <= size:
                    move = (g, value)
                    break
            if move:
                break
        if move is None:
            power = _power_move(rels, size, len(alive))
            if power is None:
                break
            rename(*power)
            moves += 1
            continue
        eliminate(*move)
        moves += 1

    # renumber surviving generators in their original order
    renum = {g: i + 1 for i, g in enumerate(alive)}

    def relabel(w):
        return tuple(renum[x] if x > 0 else -renum[-x] for x in w)

    names = tuple(p.generators[g - 1] for g in alive)
    out = Presentation(names, tuple(relabel(r) for r in rels))
    return TietzeResult(out, moves, exhausted, tuple(relabel(w) for w in images))
