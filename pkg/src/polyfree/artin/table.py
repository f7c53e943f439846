"""Embeddings of Artin groups as normal subgroups of orbifold braid groups.

Each row says: the Artin group of the given type embeds as a normal
subgroup of pi_1^orb(B_n(O)) with the given quotient, for n above a bound.
The type's subscript is n for every row except tildeA, whose subscript
is n - 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..orbifold import OrbifoldDisc
from ..serialize import dumps
from .coxeter import ArtinType

# order of each quotient, None for infinite
QUOTIENT_ORDERS = {"trivial": 1, "Z": None, "Z/2": 2, "Z/2xZ/2": 4}


@dataclass(frozen=True)
class AllcockRow:
    family: str
    rank_offset: int
    orbifold: OrbifoldDisc
    quotient: str
    n_greater_than: int

    @property
    def label(self) -> str:
        if self.rank_offset == 0:
            return f"{self.family}_n"
        return f"{self.family}_{{n{self.rank_offset:+d}}}"

    @property
    def quotient_finite(self) -> bool:
        return QUOTIENT_ORDERS[self.quotient] is not None

    @property
    def quotient_order(self) -> int | None:
        return QUOTIENT_ORDERS[self.quotient]

    def allows(self, n: int) -> bool:
        return n > self.n_greater_than

    def braid_index(self, t: ArtinType) -> int:
        """The n of this row for the Artin type ``t``."""
        if t.family != self.family:
            raise ValueError(f"{t} does not belong to the {self.label} row")
        return t.rank - self.rank_offset

    def artin_type(self, n: int) -> ArtinType:
        return ArtinType(self.family, (n + self.rank_offset,))

    def to_dict(self) -> dict:
        return {
            "type": self.label,
            "family": self.family,
            "rankOffset": self.rank_offset,
            "orbifold": self.orbifold.to_dict(),
            "quotient": self.quotient,
            "n": f"n>{self.n_greater_than}",
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AllcockRow":
        bound = d["n"]
        if not (isinstance(bound, str) and bound.startswith("n>")):
            raise ValueError(f"bad n constraint {bound!r}")
        if d["quotient"] not in QUOTIENT_ORDERS:
            raise ValueError(f"unknown quotient {d['quotient']!r}")
        return cls(
            d["family"],
            int(d["rankOffset"]),
            OrbifoldDisc.from_dict(d["orbifold"]),
            d["quotient"],
            int(bound[2:]),
        )


_ROWS = (
    AllcockRow("B", 0, OrbifoldDisc(1), "trivial", 1),
    AllcockRow("tildeA", -1, OrbifoldDisc(1), "Z", 2),
    AllcockRow("tildeB", 0, OrbifoldDisc(1, (2,)), "Z/2", 2),
    AllcockRow("tildeC", 0, OrbifoldDisc(2), "trivial", 1),
    AllcockRow("tildeD", 0, OrbifoldDisc(0, (2, 2)), "Z/2xZ/2", 2),
)


def allcock_table() -> list[AllcockRow]:
    return list(_ROWS)


def table_row(family: str) -> AllcockRow:
    for row in _ROWS:
        if row.family == family:
            return row
    raise KeyError(f"no table row for {family}")


def allcock_table_json() -> str:
    """Canonical JSON of the table; stable byte for byte."""
    return dumps([row.to_dict() for row in allcock_table()])
