"""Registry of imported theorems, used as axioms by the derivation checker."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources


@dataclass(frozen=True)
class Fact:
    id: str
    statement: str
    source: str
    claim: str
    families: tuple[str, ...]
    kind: str = "axiom"

    def covers(self, family: str) -> bool:
        return family in self.families


@lru_cache(maxsize=1)
def fact_registry() -> dict[str, Fact]:
    raw = json.loads(resources.files(__package__).joinpath("facts.json").read_text())
    return {
        d["id"]: Fact(d["id"], d["statement"], d["source"], d["claim"], tuple(d["families"]), d["kind"])
        for d in raw
    }


def get_fact(fact_id: str) -> Fact:
    try:
        return fact_registry()[fact_id]
    except KeyError:
        raise KeyError(f"unknown fact {fact_id!r}") from None
