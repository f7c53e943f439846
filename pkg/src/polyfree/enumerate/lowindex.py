"""Low-index subgroups (Sims' backtrack), intersections and characteristic cores."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..presentation import Presentation
from .coset import DEFAULT_MAX_COSETS, CosetTable, EnumerationLimit, column, standardize

DEFAULT_MAX_NODES = 5_000_000


@dataclass(frozen=True)
class LowIndexResult:
    tables: tuple[CosetTable, ...]
    # True when the node guard stopped the search early
    partial: bool = False

    def __iter__(self):
        return iter(self.tables)

    def __len__(self):
        return len(self.tables)

    def __getitem__(self, i):
        return self.tables[i]


def _conjugate_words(p: Presentation, ncols: int) -> list[list[tuple[int, ...]]]:
    """Cyclic conjugates of relators and their inverses, bucketed by first column."""
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(ncols)]
    for r in p.relators:
        cols = tuple(column(x) for x in r)
        inv = tuple(c ^ 1 for c in reversed(cols))
        seen = set()
        for w in (cols, inv):
            for i in range(len(w)):
                rot = w[i:] + w[:i]
                if rot not in seen:
                    seen.add(rot)
                    buckets[rot[0]].append(rot)
    return buckets


class _Search:
    def __init__(self, p: Presentation, max_index: int, max_nodes: int):
        self.p = p
        self.ncols = 2 * p.ngens
        self.max_index = max_index
        self.max_nodes = max_nodes
        self.nodes = 0
        self.conj = _conjugate_words(p, self.ncols)
        self.tab = [[-1] * self.ncols for _ in range(max_index)]
        self.n = 1
        self.trail: list[tuple[int, int]] = []
        self.found: list[tuple[tuple[int, ...], ...]] = []

    def assign(self, a: int, c: int, b: int) -> bool:
        """Set a.c = b and process every consequence; False on contradiction."""
        tab = self.tab
        queue = [(a, c, b)]
        while queue:
            a, c, b = queue.pop()
            if tab[a][c] != -1:
                if tab[a][c] != b:
                    return False
                continue
            if tab[b][c ^ 1] != -1:
                return False
            tab[a][c] = b
            tab[b][c ^ 1] = a
            self.trail.append((a, c))
            self.trail.append((b, c ^ 1))
            for start, col in ((a, c), (b, c ^ 1)):
                for w in self.conj[col]:
                    ded = self._scan(start, w)
                    if ded is False:
                        return False
                    if ded is not None:
                        queue.append(ded)
        return True

    def _scan(self, a: int, w: tuple[int, ...]):
        tab = self.tab
        f = a
        i = 0
        last = len(w) - 1
        while i <= last and tab[f][w[i]] != -1:
            f = tab[f][w[i]]
            i += 1
        if i > last:
            return None if f == a else False
        b = a
        j = last
        while j >= i and tab[b][w[j] ^ 1] != -1:
            b = tab[b][w[j] ^ 1]
            j -= 1
        if j < i:
            return None if f == b else False
        if j == i:
            return (f, w[i], b)
        return None

    def undo(self, mark: int) -> None:
        tab = self.tab
        while len(self.trail) > mark:
            a, c = self.trail.pop()
            tab[a][c] = -1

    def canonical(self) -> bool:
        """False when re-rooting at another coset gives a smaller table."""
        tab = self.tab
        n = self.n
        cols = range(self.ncols)
        for beta in range(1, n):
            num = [-1] * n
            num[beta] = 0
            order = [beta]
            verdict = 0
            new_a = 0
            while new_a < len(order):
                old_row = tab[order[new_a]]
                row = tab[new_a]
                for c in cols:
                    ot = old_row[c]
                    t = row[c]
                    if ot < 0 or t < 0:
                        verdict = 2
                        break
                    nt = num[ot]
                    if nt < 0:
                        nt = num[ot] = len(order)
                        order.append(ot)
                    if nt != t:
                        verdict = -1 if nt < t else 1
                        break
                if verdict:
                    break
                new_a += 1
            if verdict < 0:
                return False
        return True

    def run(self, a: int = 0, c: int = 0) -> bool:
        """Depth-first search from the first undefined entry at or after (a, c).

        Returns False if the node guard fired.
        """
        self.nodes += 1
        if self.nodes > self.max_nodes:
            return False
        tab = self.tab
        ncols = self.ncols
        while a < self.n and tab[a][c] != -1:
            c += 1
            if c == ncols:
                a, c = a + 1, 0
        if a == self.n:
            self.found.append(tuple(tuple(tab[x]) for x in range(self.n)))
            return True
        ci = c ^ 1
        for b in range(self.n):
            if tab[b][ci] != -1:
                continue
            mark = len(self.trail)
            if self.assign(a, c, b) and self.canonical():
                if not self.run(a, c):
                    return False
            self.undo(mark)
        if self.n < self.max_index:
            mark = len(self.trail)
            b = self.n
            self.n += 1
            if self.assign(a, c, b) and self.canonical():
                if not self.run(a, c):
                    return False
            self.undo(mark)
            self.n -= 1
        return True


def low_index_subgroups(
    p: Presentation, max_index: int, max_nodes: int = DEFAULT_MAX_NODES
) -> LowIndexResult:
    """One coset table per conjugacy class of subgroups of index <= ``max_index``.

    Tables are sorted by index, then lexicographically.
    """
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    s = _Search(p, max_index, max_nodes)
    if p.ngens == 0:
        s.found.append(((),))
        complete = True
    else:
        complete = s.run()
    raws = sorted(set(s.found), key=lambda t: (len(t), t))
    return LowIndexResult(tuple(CosetTable(p, None, raw) for raw in raws), not complete)


def conjugates(t: CosetTable) -> list[CosetTable]:
    """Distinct conjugates of the subgroup, one per distinct re-rooted table."""
    seen = {}
    for c in range(len(t.table)):
        tab = standardize(t.table, c)
        if tab not in seen:
            seen[tab] = CosetTable(t.presentation, None, tab) if c else t
    return list(seen.values())


def _product_orbit(tables: Sequence[tuple[tuple[int, ...], ...]], ncols: int, limit: int):
    start = (0,) * len(tables)
    num = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        pt = order[i]
        row = []
        for c in range(ncols):
            img = tuple(tab[x][c] for tab, x in zip(tables, pt))
            k = num.get(img)
            if k is None:
                if len(order) >= limit:
                    raise EnumerationLimit(len(order))
                k = num[img] = len(order)
                order.append(img)
            row.append(k)
        rows.append(tuple(row))
        i += 1
    return tuple(rows)


def intersect_tables(
    t1: CosetTable, t2: CosetTable, max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    """Table of the intersection of two subgroups (orbit of the base pair)."""
    if t1.presentation != t2.presentation:
        raise ValueError("coset tables over different presentations")
    if not (t1.complete and t2.complete):
        raise ValueError("intersection needs complete tables")
    p = t1.presentation
    return CosetTable(p, None, _product_orbit([t1.table, t2.table], 2 * p.ngens, max_cosets))


def characteristic_core(
    p: Presentation,
    d: int,
    max_cosets: int = DEFAULT_MAX_COSETS,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> CosetTable:
    """Intersection of all subgroups of index at most ``d``.

    Any automorphism permutes the subgroups of a given index, so the
    intersection is characteristic. Raises :class:`EnumerationLimit` if
    the low-index search or the intersection hits its limit.
    """
    classes = low_index_subgroups(p, d, max_nodes)
    if classes.partial:
        raise EnumerationLimit(f"low-index search for index <= {d} stopped after {max_nodes} nodes")
    subgroups = []
    for t in classes:
        subgroups.extend(conjugates(t))
    return CosetTable(p, None, _product_orbit([t.table for t in subgroups], 2 * p.ngens, max_cosets))
