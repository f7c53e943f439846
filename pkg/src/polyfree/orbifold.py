"""The orbifolds C(m,k;q) and their fundamental groups F_m * Z/q_1 * ... * Z/q_k.

Convention: punctures first, then cone points, everywhere.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .config import Config
from .enumerate import reidemeister_schreier, stallings_fold, table_from_action, todd_coxeter
from .presentation import GroupHom, Presentation
from .report import INCONCLUSIVE, Report
from .tietze import tietze_simplify
from .words import commutator, exponent_sum


@dataclass(frozen=True)
class OrbifoldDisc:
    punctures: int
    cone_orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cone_orders", tuple(int(q) for q in self.cone_orders))
        if self.punctures < 0:
            raise ValueError("puncture count must be nonnegative")
        if any(q < 2 for q in self.cone_orders):
            raise ValueError(f"cone orders must be >= 2, got {self.cone_orders}")

    @property
    def cone_points(self) -> int:
        return len(self.cone_orders)

    def __str__(self):
        if not self.cone_orders:
            return f"C({self.punctures},0)"
        qs = ",".join(map(str, self.cone_orders))
        return f"C({self.punctures},{self.cone_points};({qs}))"

    def compact(self) -> str:
        s = f"{self.punctures},{self.cone_points}"
        return s + (";" + ",".join(map(str, self.cone_orders)) if self.cone_orders else "")

    @classmethod
    def parse(cls, text: str) -> "OrbifoldDisc":
        """Parse the compact form ``"m,k;q1,...,qk"``, e.g. ``"1,1;2"`` or ``"2,0"``."""
        m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*(?:;\s*\(?([\d,\s]*)\)?)?\s*", text)
        if not m:
            raise ValueError(f"cannot parse orbifold {text!r}; expected 'm,k;q1,...,qk'")
        qs = tuple(int(q) for q in re.split(r"[,\s]+", m.group(3) or "") if q)
        if len(qs) != int(m.group(2)):
            raise ValueError(f"{text!r}: cone count {m.group(2)} but {len(qs)} orders given")
        return cls(int(m.group(1)), qs)

    def to_dict(self) -> dict:
        return {"punctures": self.punctures, "coneOrders": list(self.cone_orders)}

    @classmethod
    def from_dict(cls, d: dict) -> "OrbifoldDisc":
        return cls(d["punctures"], tuple(d["coneOrders"]))


def puncture_regular(o: OrbifoldDisc, t: int) -> OrbifoldDisc:
    """Remove ``t`` more regular (non-cone) points."""
    if t < 0:
        raise ValueError("cannot remove a negative number of points")
    return OrbifoldDisc(o.punctures + t, o.cone_orders)


@dataclass(frozen=True)
class FreeProductGroup:
    free_rank: int
    cyclic_orders: tuple[int, ...] = ()

    @property
    def presentation(self) -> Presentation:
        m = self.free_rank
        names = tuple(f"x{i + 1}" for i in range(m)) + tuple(
            f"c{j + 1}" for j in range(len(self.cyclic_orders))
        )
        rels = tuple((m + j + 1,) * q for j, q in enumerate(self.cyclic_orders))
        return Presentation(names, rels)

    @property
    def euler_characteristic(self) -> Fraction:
        return euler_characteristic(self)

    def __str__(self):
        parts = [f"F_{self.free_rank}"] if self.free_rank > 1 else ["Z"] * self.free_rank
        parts += [f"Z/{q}" for q in self.cyclic_orders]
        return " * ".join(parts) if parts else "1"


def orb_fundamental_group(o: OrbifoldDisc) -> FreeProductGroup:
    return FreeProductGroup(o.punctures, o.cone_orders)


def euler_characteristic(g: FreeProductGroup) -> Fraction:
    k = len(g.cyclic_orders)
    return 1 - g.free_rank - k + sum((Fraction(1, q) for q in g.cyclic_orders), Fraction(0))


@dataclass(frozen=True)
class VFCert:
    """A free subgroup of finite index: the kernel of G -> Z/q_1 x ... x Z/q_k.

    Free generators map to 0 and the j-th cone generator to the generator
    of the j-th factor; the kernel meets no conjugate of a finite factor.
    """

    group: FreeProductGroup
    kernel_index: int
    kernel_rank: int

    @property
    def quotient_orders(self) -> tuple[int, ...]:
        return self.group.cyclic_orders

    def to_dict(self) -> dict:
        return {"kernelIndex": self.kernel_index, "kernelRank": self.kernel_rank}


def free_subgroup_cert(g: FreeProductGroup) -> VFCert:
    d = math.prod(g.cyclic_orders)
    rank = 1 - d * euler_characteristic(g)
    assert rank.denominator == 1
    return VFCert(g, d, int(rank))


def quotient_presentation(orders) -> Presentation:
    """Z/q_1 x ... x Z/q_k as <e1..ek | e_j^q_j, [e_i, e_j]>."""
    k = len(orders)
    rels = [(j + 1,) * q for j, q in enumerate(orders)]
    rels += [commutator((i + 1,), (j + 1,)) for i, j in itertools.combinations(range(k), 2)]
    return Presentation(tuple(f"e{j + 1}" for j in range(k)), tuple(rels))


def quotient_map(g: FreeProductGroup) -> GroupHom:
    m = g.free_rank
    images = [()] * m + [(j + 1,) for j in range(len(g.cyclic_orders))]
    return GroupHom(g.presentation, quotient_presentation(g.cyclic_orders), tuple(images))


def quotient_action(g: FreeProductGroup) -> list[tuple[int, ...]]:
    """Permutations of the generators on the elements of the finite quotient."""
    orders = g.cyclic_orders
    points = list(itertools.product(*(range(q) for q in orders)))
    index = {pt: i for i, pt in enumerate(points)}
    perms = [tuple(range(len(points)))] * g.free_rank
    for j, q in enumerate(orders):
        perms.append(
            tuple(index[pt[:j] + ((pt[j] + 1) % q,) + pt[j + 1:]] for pt in points)
        )
    return perms


def kernel_generators(g: FreeProductGroup):
    """Words generating the kernel of the quotient map (its Schreier generators)."""
    return table_from_action(g.presentation, quotient_action(g)).generators


def verify_vf_cert(c: VFCert, config: Config | None = None) -> Report:
    """Mechanically confirm the certificate's index and rank.

    Index: Todd-Coxeter on the kernel generators. Rank: Reidemeister-Schreier
    on that table, Tietze simplification, then folding of the free result.
    Enumeration or simplification running out gives INCONCLUSIVE, never PASS.
    """
    config = config or Config()
    g = c.group
    p = g.presentation
    rep = Report(f"virtually free certificate for {g}")

    chi = euler_characteristic(g)
    rep.expect(
        "euler characteristic",
        1 - c.kernel_rank == c.kernel_index * chi,
        f"1 - {c.kernel_rank} vs {c.kernel_index} * ({chi})",
    )

    hom = quotient_map(g)
    valid = hom.is_valid(config.max_cosets)
    if valid is None:
        rep.add("quotient map is a homomorphism", INCONCLUSIVE, "target enumeration hit the limit")
    else:
        rep.expect("quotient map is a homomorphism", valid)

    # each cone generator must map to an element of full order q_j
    perms = quotient_action(g)
    orders_ok = all(
        _perm_order(perms[g.free_rank + j]) == q for j, q in enumerate(g.cyclic_orders)
    )
    rep.expect("kernel meets finite factors trivially", orders_ok)

    gens = kernel_generators(g)
    # the quotient is abelian, so membership is read off exponent sums
    in_kernel = all(
        exponent_sum(w, g.free_rank + j + 1) % q == 0
        for w in gens
        for j, q in enumerate(g.cyclic_orders)
    )
    rep.expect("kernel generators lie in the kernel", in_kernel)

    t = todd_coxeter(p, gens, max_cosets=config.max_cosets)
    if not t.complete:
        rep.add("kernel index", INCONCLUSIVE, f"coset limit {config.max_cosets} reached")
        rep.add("kernel rank", INCONCLUSIVE, "needs the coset table")
        return rep
    rep.expect("kernel index", t.index == c.kernel_index, f"enumerated {t.index}, claimed {c.kernel_index}")

    sub = reidemeister_schreier(p, t)
    simp = tietze_simplify(sub, config.tietze_budget)
    q = simp.presentation
    if q.relators:
        why = "budget exhausted" if simp.exhausted else "relators remain after simplification"
        rep.add("kernel rank", INCONCLUSIVE, f"{why}: {q.ngens} generators, {len(q.relators)} relators")
        return rep
    if p.is_free:
        # the ambient group is free: fold the subgroup generators directly
        folded = stallings_fold(p, gens)
    else:
        folded = stallings_fold(q, [(i + 1,) for i in range(q.ngens)])
    rank = folded.rank
    rep.expect(
        "kernel rank",
        rank == q.ngens == c.kernel_rank,
        f"simplified to {q.ngens} free generators, folded rank {rank}, claimed {c.kernel_rank}",
    )
    return rep


def _perm_order(perm) -> int:
    order = 1
    seen = set()
    for start in range(len(perm)):
        if start in seen:
            continue
        n = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        order = math.lcm(order, n)
    return order

