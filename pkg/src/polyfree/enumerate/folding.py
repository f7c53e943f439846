"""Stallings folding for finitely generated subgroups of free groups."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..presentation import Presentation
from ..words import Word, free_reduce


@dataclass(frozen=True)
class FoldedGraph:
    """Core graph of a subgroup, vertices numbered breadth-first from the base 0.

    ``edges`` holds ``(source, generator, target)`` triples, sorted.
    """

    nvertices: int
    edges: tuple[tuple[int, int, int], ...]
    ngens: int

    @property
    def rank(self) -> int:
        return len(self.edges) - self.nvertices + 1

    @property
    def is_cover(self) -> bool:
        out = {(s, g) for s, g, _ in self.edges}
        return len(out) == self.nvertices * self.ngens

    @property
    def index(self) -> int | None:
        """Index in the ambient free group, ``None`` when infinite."""
        return self.nvertices if self.is_cover else None

    def is_folded(self) -> bool:
        out = [(s, g) for s, g, _ in self.edges]
        inc = [(t, g) for _, g, t in self.edges]
        return len(set(out)) == len(out) and len(set(inc)) == len(inc)

    def basis(self) -> list[Word]:
        """Free basis read off the breadth-first spanning tree."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(self.nvertices)}
        for s, g, t in self.edges:
            adj[s].append((g, t))
            adj[t].append((-g, s))
        for v in adj:
            adj[v].sort(key=lambda e: (abs(e[0]), e[0] < 0, e[1]))
        path: dict[int, Word] = {0: ()}
        tree = set()
        order = [0]
        for v in order:
            for x, u in adj[v]:
                if u not in path:
                    path[u] = path[v] + (x,)
                    tree.add((v, x, u) if x > 0 else (u, -x, v))
                    order.append(u)
        return [
            free_reduce(path[s] + (g,) + tuple(-y for y in reversed(path[t])))
            for s, g, t in self.edges
            if (s, g, t) not in tree
        ]


def _fold(edges: list[tuple[int, int, int]]):
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent.get(v, v) != v:
            parent[v] = parent.get(parent[v], parent[v])
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        a, b = sorted((find(a), find(b)))
        if a != b:
            parent[b] = a

    while True:
        out: dict[tuple[int, int], int] = {}
        inc: dict[tuple[int, int], int] = {}
        merged = False
        for s, g, t in edges:
            s, t = find(s), find(t)
            o = find(out.setdefault((s, g), t))
            if o != t:
                union(o, t)
                merged = True
                continue
            i = find(inc.setdefault((t, g), s))
            if i != s:
                union(i, s)
                merged = True
        edges = sorted({(find(s), g, find(t)) for s, g, t in edges})
        if not merged:
            return edges, find


def stallings_fold(p: Presentation, generators: Sequence[Sequence[int]]) -> FoldedGraph:
    """Fold the bouquet of ``generators`` and trim it to its core at the base."""
    if not p.is_free:
        raise ValueError("folding needs a free ambient group (no relators)")
    edges = []
    nverts = 1
    for w in generators:
        w = free_reduce(w, p.ngens)
        if not w:
            continue
        prev = 0
        for k, x in enumerate(w):
            nxt = 0 if k == len(w) - 1 else nverts
            if nxt:
                nverts += 1
            edges.append((prev, x, nxt) if x > 0 else (nxt, -x, prev))
            prev = nxt
    edges, find = _fold(edges)
    base = find(0)
    # trim hanging trees away from the base
    while True:
        deg: dict[int, int] = {}
        for s, _, t in edges:
            deg[s] = deg.get(s, 0) + 1
            deg[t] = deg.get(t, 0) + 1
        leaves = {v for v, d in deg.items() if d == 1 and v != base}
        if not leaves:
            break
        edges = [e for e in edges if e[0] not in leaves and e[2] not in leaves]
    return _canonical(base, edges, p.ngens)


def _canonical(base: int, edges, ngens: int) -> FoldedGraph:
    adj: dict[int, list[tuple[int, int]]] = {}
    for s, g, t in edges:
        adj.setdefault(s, []).append((g, t))
        adj.setdefault(t, []).append((-g, s))
    for v in adj:
        adj[v].sort(key=lambda e: (abs(e[0]), e[0] < 0))
    num = {base: 0}
    order = [base]
    for v in order:
        for _, u in adj.get(v, []):
            if u not in num:
                num[u] = len(order)
                order.append(u)
    new = sorted((num[s], g, num[t]) for s, g, t in edges)
    return FoldedGraph(len(order), tuple(new), ngens)


def membership(g: FoldedGraph, w: Sequence[int]) -> bool:
    out = {(s, x): t for s, x, t in g.edges}
    inc = {(t, x): s for s, x, t in g.edges}
    v = 0
    for x in free_reduce(w):
        v = out.get((v, x)) if x > 0 else inc.get((v, -x))
        if v is None:
            return False
    return v == 0
