"""Artin types, Coxeter matrices and Artin presentations."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..presentation import Presentation
from ..words import inverse

# None stands for an infinite entry
CoxeterMatrix = tuple[tuple[int | None, ...], ...]

FINITE_FAMILIES = ("A", "B", "D", "F4", "G2", "I2")
AFFINE_FAMILIES = ("tildeA", "tildeB", "tildeC", "tildeD")
FAMILIES = FINITE_FAMILIES + AFFINE_FAMILIES + ("G",)

# smallest parameter for which the family's diagram is defined here
_MIN_DIAGRAM = {"A": 1, "B": 2, "D": 4, "I2": 2, "tildeA": 1, "tildeB": 3, "tildeC": 2, "tildeD": 3}


class UnsupportedType(ValueError):
    pass


@dataclass(frozen=True)
class ArtinType:
    """``params`` is (n,) for rank families, (p,) for I2, () for F4/G2, (de, e, r) for G."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        f, ps = self.family, self.params
        if f not in FAMILIES:
            raise UnsupportedType(f"unknown family {f!r}")
        if f in ("F4", "G2"):
            if ps:
                raise ValueError(f"{f} takes no parameter")
        elif f == "G":
            if len(ps) != 3:
                raise ValueError("G(de,e,r) needs three parameters")
            de, e, r = ps
            if e < 1 or de % e or de // e < 2 or r < 2:
                raise ValueError(f"G({de},{e},{r}) needs d = de/e an integer >= 2 and r >= 2")
        else:
            if len(ps) != 1:
                raise ValueError(f"{f} needs one parameter")
            if ps[0] < 1:
                raise ValueError(f"{f}_{ps[0]}: parameter must be positive")

    @property
    def rank(self) -> int | None:
        """The subscript n (p for I2, r for G, 4/2 for F4/G2)."""
        if self.family == "F4":
            return 4
        if self.family in ("G2", "I2"):
            return 2 if self.family == "G2" else self.params[0]
        if self.family == "G":
            return self.params[2]
        return self.params[0]

    @property
    def is_affine(self) -> bool:
        return self.family in AFFINE_FAMILIES

    @property
    def is_finite_real(self) -> bool:
        return self.family in FINITE_FAMILIES

    def __str__(self):
        f, ps = self.family, self.params
        if f in ("F4", "G2"):
            return f
        if f == "I2":
            return f"I2({ps[0]})"
        if f == "G":
            return "G({},{},{})".format(*ps)
        return f"{f}_{ps[0]}"

    @classmethod
    def parse(cls, text: str) -> "ArtinType":
        text = text.replace(" ", "")
        if text in ("F4", "G2"):
            return cls(text)
        m = re.fullmatch(r"I2\((\d+)\)", text)
        if m:
            return cls("I2", (int(m.group(1)),))
        m = re.fullmatch(r"G\((\d+),(\d+),(\d+)\)", text)
        if m:
            return cls("G", tuple(int(x) for x in m.groups()))
        m = re.fullmatch(r"(A|B|D|tildeA|tildeB|tildeC|tildeD)_?(\d+)", text)
        if m:
            return cls(m.group(1), (int(m.group(2)),))
        raise UnsupportedType(f"cannot parse Artin type {text!r}")

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params)}

    @classmethod
    def from_dict(cls, d: dict) -> "ArtinType":
        return cls(d["family"], tuple(d.get("params", ())))


def _blank(n: int) -> list[list[int | None]]:
    return [[1 if i == j else 2 for j in range(n)] for i in range(n)]


def _edge(m, i, j, v):
    m[i][j] = m[j][i] = v


def _path(n: int, weights=None) -> list[list[int | None]]:
    m = _blank(n)
    for i in range(n - 1):
        _edge(m, i, i + 1, 3)
    for (i, j), v in (weights or {}).items():
        _edge(m, i, j, v)
    return m


def coxeter_matrix(t: ArtinType) -> CoxeterMatrix:
    """Standard Coxeter matrix; affine types have rank + 1 generators."""
    f = t.family
    if f == "G":
        raise UnsupportedType(f"{t} has no Coxeter matrix here")
    if f in _MIN_DIAGRAM and t.params[0] < _MIN_DIAGRAM[f]:
        raise UnsupportedType(f"{t}: diagram needs parameter >= {_MIN_DIAGRAM[f]}")
    if f == "F4":
        m = _path(4, {(1, 2): 4})
    elif f == "G2":
        m = _path(2, {(0, 1): 6})
    elif f == "I2":
        m = _path(2, {(0, 1): t.params[0]})
    else:
        n = t.params[0]
        if f == "A":
            m = _path(n)
        elif f == "B":
            m = _path(n, {(n - 2, n - 1): 4})
        elif f == "D":
            m = _blank(n)
            for i in range(n - 2):
                _edge(m, i, i + 1, 3)
            _edge(m, n - 3, n - 1, 3)
        elif f == "tildeA" or (f == "tildeD" and n == 3):
            # tildeD_3 coincides with tildeA_3
            size = n + 1
            m = _blank(size)
            if size == 2:
                _edge(m, 0, 1, None)
            else:
                for i in range(size):
                    _edge(m, i, (i + 1) % size, 3)
        elif f == "tildeB":
            # two leaves on node 2, double bond at the far end
            m = _blank(n + 1)
            _edge(m, 0, 2, 3)
            for i in range(1, n):
                _edge(m, i, i + 1, 3)
            _edge(m, n - 1, n, 4)
        elif f == "tildeC":
            m = _path(n + 1, {(0, 1): 4, (n - 1, n): 4})
        elif f == "tildeD":
            m = _blank(n + 1)
            _edge(m, 0, 2, 3)
            for i in range(1, n - 1):
                _edge(m, i, i + 1, 3)
            _edge(m, n - 2, n, 3)
        else:
            raise UnsupportedType(str(t))
    return tuple(tuple(row) for row in m)


def check_coxeter_matrix(m: CoxeterMatrix) -> None:
    n = len(m)
    for i in range(n):
        if len(m[i]) != n or m[i][i] != 1:
            raise ValueError("Coxeter matrix must be square with unit diagonal")
        for j in range(n):
            if i != j and (m[i][j] != m[j][i] or (m[i][j] is not None and m[i][j] < 2)):
                raise ValueError(f"bad Coxeter entry at ({i},{j})")


def alternating(x: int, y: int, length: int) -> tuple[int, ...]:
    return tuple(x if k % 2 == 0 else y for k in range(length))


def artin_presentation(m: CoxeterMatrix) -> Presentation:
    """<s1..sn | prod(si,sj;mij) = prod(sj,si;mij) for i < j, mij finite>."""
    check_coxeter_matrix(m)
    n = len(m)
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            mij = m[i][j]
            if mij is None:
                continue
            rels.append(alternating(i + 1, j + 1, mij) + inverse(alternating(j + 1, i + 1, mij)))
    return Presentation(tuple(f"s{i + 1}" for i in range(n)), tuple(rels))


def odd_components(m: CoxeterMatrix) -> int:
    """Connected components of the graph joining generators with odd m_ij."""
    n = len(m)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] is not None and m[i][j] % 2:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(n)})
