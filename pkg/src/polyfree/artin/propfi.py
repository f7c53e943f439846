"""Desk-scale run of the characteristic-subgroup step on a concrete group."""
from __future__ import annotations

from dataclasses import dataclass

from ..config import Config
from ..enumerate import CosetTable, EnumerationLimit, characteristic_core, reidemeister_schreier
from ..presentation import Presentation
from ..report import INCONCLUSIVE, Report
from ..tietze import tietze_simplify


@dataclass
class PropFiDemo:
    report: Report
    core: CosetTable | None = None
    simplified: Presentation | None = None

    @property
    def index(self) -> int | None:
        return self.core.index if self.core else None

    @property
    def free_rank(self) -> int | None:
        """Rank of the core when its simplified presentation has no relators."""
        if self.simplified is None or self.simplified.relators:
            return None
        return self.simplified.ngens


def prop_fi_demo(p: Presentation, d: int, config: Config | None = None) -> PropFiDemo:
    """Intersect all subgroups of index <= d, rewrite, simplify, look for freeness."""
    config = config or Config()
    rep = Report(f"characteristic core of index-<= {d} subgroups of {p}")
    try:
        core = characteristic_core(p, d, max_cosets=config.max_cosets)
    except EnumerationLimit as e:
        rep.add("characteristic core", INCONCLUSIVE, str(e))
        return PropFiDemo(rep)
    rep.expect("core table is valid", not core.verify(), "; ".join(core.verify()))
    rep.expect("core is normal", core.is_normal(), f"index {core.index}")
    sub = reidemeister_schreier(p, core)
    simp = tietze_simplify(sub, config.tietze_budget)
    q = simp.presentation
    demo = PropFiDemo(rep, core, q)
    if q.relators:
        rep.add("core is visibly free", INCONCLUSIVE, f"{q.ngens} generators, {len(q.relators)} relators remain")
    else:
        rep.expect("core is visibly free", True, f"free of rank {q.ngens}")
        if p.is_free:
            want = 1 + core.index * (p.ngens - 1)
            rep.expect("Nielsen-Schreier rank", q.ngens == want, f"{q.ngens} vs {want}")
    return demo
