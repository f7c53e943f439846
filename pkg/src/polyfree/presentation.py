"""Finite presentations, free products and homomorphisms."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .words import (
    Word,
    check_generator_names,
    check_word,
    cyclic_reduce,
    exponent_sum,
    format_word,
    free_reduce,
    parse_word,
)


@dataclass(frozen=True)
class Presentation:
    """Generators by name, relators as freely and cyclically reduced words.

    Relators keep their input order; trivial relators are dropped.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        check_generator_names(gens)
        rels = []
        for r in self.relators:
            r = cyclic_reduce(check_word(r, len(gens)))
            if r:
                rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def is_free(self) -> bool:
        return not self.relators

    def word(self, text: str) -> Word:
        return free_reduce(parse_word(text, self.generators), self.ngens)

    def format(self, w: Sequence[int]) -> str:
        return format_word(w, self.generators)

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def __str__(self):
        rels = ", ".join(self.format(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [self.format(r) for r in self.relators],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Presentation":
        gens = tuple(d["generators"])
        return cls(gens, tuple(parse_word(r, gens) for r in d.get("relators", [])))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        return cls.from_dict(json.loads(text))


def free_group(rank: int) -> Presentation:
    if rank <= 26:
        return Presentation(tuple("abcdefghijklmnopqrstuvwxyz"[:rank]))
    return Presentation(tuple(f"x{i + 1}" for i in range(rank)))


@dataclass(frozen=True)
class FreeProduct:
    presentation: Presentation
    offsets: tuple[int, ...]


def free_product_with_offsets(ps: Sequence[Presentation]) -> FreeProduct:
    """Free product; ``offsets[i]`` is added to the letters of factor ``i``.

    Clashing generator names get the factor number appended.
    """
    if not ps:
        raise ValueError("free product of an empty list")
    all_names = [n for p in ps for n in p.generators]
    clash = len(set(all_names)) != len(all_names)
    names: list[str] = []
    rels: list[Word] = []
    offsets = []
    for i, p in enumerate(ps):
        off = len(names)
        offsets.append(off)
        names.extend(f"{n}_{i + 1}" if clash else n for n in p.generators)
        for r in p.relators:
            rels.append(tuple(x + off if x > 0 else x - off for x in r))
    return FreeProduct(Presentation(tuple(names), tuple(rels)), tuple(offsets))


def free_product(ps: Sequence[Presentation]) -> Presentation:
    return free_product_with_offsets(ps).presentation


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [[exponent_sum(r, g + 1) for g in range(p.ngens)] for r in p.relators]


@dataclass(frozen=True)
class GroupHom:
    source: Presentation
    target: Presentation
    images: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        if len(self.images) != self.source.ngens:
            raise ValueError("need one image per source generator")
        imgs = tuple(free_reduce(w, self.target.ngens) for w in self.images)
        object.__setattr__(self, "images", imgs)

    def apply(self, w: Sequence[int]) -> Word:
        out: list[int] = []
        for x in w:
            img = self.images[abs(x) - 1]
            out.extend(img if x > 0 else tuple(-y for y in reversed(img)))
        return free_reduce(out)

    def is_valid(self, max_cosets: int = 100_000) -> bool | None:
        """Check that every source relator maps to the identity.

        Free targets are decided by free reduction; otherwise the target's
        regular representation is enumerated, so the answer is ``None``
        when the target is infinite or too large for ``max_cosets``.
        """
        images = [self.apply(r) for r in self.source.relators]
        if self.target.is_free:
            return all(not w for w in images)
        from .enumerate.coset import todd_coxeter

        t = todd_coxeter(self.target, [], max_cosets=max_cosets)
        if not t.complete:
            return None
        return all(t.trace(0, w) == 0 for w in images)
