"""Todd-Coxeter coset enumeration (HLT strategy) and coset tables.

Columns are ordered g1, g1^-1, g2, g2^-1, ...; cosets are 0-based and
coset 0 is the subgroup itself.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ..presentation import Presentation
from ..words import Word, check_word, format_word, free_reduce, parse_word

DEFAULT_MAX_COSETS = 100_000


class EnumerationLimit(RuntimeError):
    """Raised where a caller needs a complete table but the limit was hit."""


def column(x: int) -> int:
    return 2 * (abs(x) - 1) + (x < 0)


def letter(col: int) -> int:
    return col // 2 + 1 if col % 2 == 0 else -(col // 2 + 1)


@dataclass(frozen=True)
class CosetTable:
    """A coset table; ``subgroup`` None means "the stabilizer of coset 0".

    In that case :attr:`generators` falls back to the Schreier generators.
    """

    presentation: Presentation
    subgroup: tuple[Word, ...] | None
    table: tuple[tuple[int, ...], ...]
    status: str = "complete"
    # total cosets allocated during enumeration, kept for diagnostics
    defined: int = field(default=0, compare=False)

    @cached_property
    def generators(self) -> tuple[Word, ...]:
        if self.subgroup is not None:
            return self.subgroup
        from .schreier import schreier_generators

        return tuple(schreier_generators(self).values())

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def index(self) -> int | None:
        return len(self.table) if self.complete else None

    def act(self, coset: int, x: int) -> int:
        return self.table[coset][column(x)]

    def trace(self, coset: int, w: Sequence[int]) -> int:
        for x in w:
            coset = self.table[coset][column(x)]
        return coset

    def permutation(self, gen: int) -> tuple[int, ...]:
        c = column(gen)
        return tuple(row[c] for row in self.table)

    def contains(self, w: Sequence[int]) -> bool:
        return self.trace(0, w) == 0

    def is_normal(self) -> bool:
        """Every coset stabilizer equals the subgroup, i.e. the action is regular."""
        return all(rebase(self, c).table == self.table for c in range(len(self.table)))

    def verify(self) -> list[str]:
        """Problems with this table; empty when it is a valid complete table."""
        if not self.complete:
            return ["table is not complete"]
        p = self.presentation
        n = len(self.table)
        errs = []
        for a, row in enumerate(self.table):
            if len(row) != 2 * p.ngens:
                errs.append(f"row {a} has wrong width")
                continue
            for c, b in enumerate(row):
                if not 0 <= b < n:
                    errs.append(f"entry ({a},{c}) out of range")
                elif self.table[b][c ^ 1] != a:
                    errs.append(f"column {c} is not inverse to column {c ^ 1} at {a}")
        if errs:
            return errs
        for r in p.relators:
            for a in range(n):
                if self.trace(a, r) != a:
                    errs.append(f"relator {p.format(r)} not closed at coset {a}")
        for w in self.generators:
            if not self.contains(w):
                errs.append(f"subgroup generator {p.format(w)} not a loop at coset 0")
        seen = {0}
        todo = [0]
        while todo:
            a = todo.pop()
            for b in self.table[a]:
                if b not in seen:
                    seen.add(b)
                    todo.append(b)
        if len(seen) != n:
            errs.append("action is not transitive")
        return errs

    def to_dict(self) -> dict:
        names = self.presentation.generators
        return {
            "index": self.index,
            "table": [list(row) for row in self.table],
            "subgroup": [format_word(w, names) for w in self.generators],
            "status": self.status,
        }

    @classmethod
    def from_dict(cls, d: dict, presentation: Presentation) -> "CosetTable":
        names = presentation.generators
        table = tuple(tuple(int(x) for x in row) for row in d["table"])
        t = cls(
            presentation,
            tuple(parse_word(w, names) for w in d["subgroup"]),
            table,
            d["status"],
        )
        if t.complete and d.get("index") != len(table):
            raise ValueError("index field disagrees with table size")
        return t

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def standardize(table: Sequence[Sequence[int]], base: int = 0) -> tuple[tuple[int, ...], ...]:
    """Renumber a complete table by breadth-first discovery from ``base``.

    Cosets not reachable from ``base`` are dropped.
    """
    order = [base]
    num = {base: 0}
    i = 0
    while i < len(order):
        for b in table[order[i]]:
            if b not in num:
                num[b] = len(order)
                order.append(b)
        i += 1
    return tuple(tuple(num[b] for b in table[a]) for a in order)


def rebase(t: CosetTable, coset: int) -> CosetTable:
    """Table of the conjugate subgroup stabilizing ``coset``."""
    return CosetTable(t.presentation, None, standardize(t.table, coset))


def table_from_action(p: Presentation, perms: Sequence[Sequence[int]], base: int = 0) -> CosetTable:
    """Coset table of the stabilizer of ``base`` under a permutation action.

    ``perms[i]`` is the permutation of generator i+1; the orbit of ``base``
    is kept. Subgroup generators are the Schreier generators of the action.
    """
    if len(perms) != p.ngens:
        raise ValueError("need one permutation per generator")
    npts = len(perms[0]) if perms else 1
    raw = []
    for a in range(npts):
        row = []
        for perm in perms:
            row.append(perm[a])
            row.append(perm.index(a))
        raw.append(row)
    return CosetTable(p, None, standardize(raw, base))


class _Enumerator:
    def __init__(self, p: Presentation, sub, max_cosets: int):
        self.ncols = 2 * p.ngens
        self.rels = [tuple(column(x) for x in r) for r in p.relators]
        self.sub = [tuple(column(x) for x in w) for w in sub]
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]

    def live(self, a: int) -> bool:
        return self.parent[a] == a

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def define(self, a: int, c: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise EnumerationLimit(len(self.table))
        b = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(b)
        self.table[a][c] = b
        self.table[b][c ^ 1] = a

    def merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for c in range(self.ncols):
                d = self.table[g][c]
                if d is None:
                    continue
                self.table[d][c ^ 1] = None
                mu, nu = self.find(g), self.find(d)
                if self.table[mu][c] is not None:
                    self.merge(nu, self.table[mu][c], queue)
                elif self.table[nu][c ^ 1] is not None:
                    self.merge(mu, self.table[nu][c ^ 1], queue)
                else:
                    self.table[mu][c] = nu
                    self.table[nu][c ^ 1] = mu

    def scan_and_fill(self, a: int, w: tuple[int, ...]) -> None:
        table = self.table
        f, b = a, a
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != a:
                    self.coincidence(f, a)
                return
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def run(self) -> None:
        for w in self.sub:
            self.scan_and_fill(0, w)
        a = 0
        while a < len(self.table):
            if self.live(a):
                for w in self.rels:
                    self.scan_and_fill(a, w)
                    if not self.live(a):
                        break
                if self.live(a):
                    for c in range(self.ncols):
                        if self.table[a][c] is None:
                            self.define(a, c)
            a += 1

    def compressed(self) -> tuple[tuple[int, ...], ...]:
        livec = [a for a in range(len(self.table)) if self.live(a)]
        raw = {a: self.table[a] for a in livec}
        num = {a: i for i, a in enumerate(livec)}
        dense = [[num[raw[a][c]] for c in range(self.ncols)] for a in livec]
        return standardize(dense, 0)


def todd_coxeter(
    p: Presentation, sub: Sequence[Sequence[int]], max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    """Enumerate the cosets of ``<sub>`` in the group presented by ``p``.

    Hitting ``max_cosets`` gives a table with status ``exceeded-limit``
    and no rows rather than an exception.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    sub = tuple(free_reduce(check_word(w, p.ngens)) for w in sub)
    e = _Enumerator(p, sub, max_cosets)
    try:
        e.run()
    except EnumerationLimit:
        return CosetTable(p, sub, (), "exceeded-limit", len(e.table))
    return CosetTable(p, sub, e.compressed(), "complete", len(e.table))
