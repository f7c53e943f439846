"""Derivations of virtual poly-freeness for Artin groups, and their checker.

A derivation is a list of steps. Each step names a rule, its premises
("step:N" for an earlier step, 1-based, or "fact:ID" for a registry
fact), a payload, and the claim it concludes. The checker recomputes
every claim with the same rule functions the builder uses and verifies
any embedded tower certificates.

Rules:

R-Fact
    Cite a registry fact about a type the fact covers.
R-Table
    Cite a row of the embedding table: the Artin group is a normal
    subgroup of pi_1^orb(B_n(O)) with the row's quotient. The row's
    bound on n is enforced.
R-Tower
    The orbifold braid group of a table step carries the normal series
    given by an attached full braid certificate.
R-FiniteIndexTransfer
    A finitely presented normal subgroup of finite index in a group
    with a finitely presented poly-VF series inherits such a series
    (intersect the series with the subgroup). Needs a finite quotient.
R-PropFi
    Torsion-free + finitely presented poly-VF series gives virtually
    poly-free: the bottom layer is virtually free and torsion-free hence
    free; inductively pass to a characteristic finite-index subgroup of
    H_{n-1} and pull back a free finite-index subgroup of the quotient.
R-Subgroup
    Virtual poly-freeness passes to subgroups: intersecting a poly-free
    series of a finite-index subgroup with the subgroup gives successive
    quotients that embed in free groups, hence are free.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..config import Config
from ..orbifold import OrbifoldDisc
from ..report import FAIL, Report
from ..serialize import SerializationError, dumps, loads
from ..tower import PolySeriesCert, full_braid_cert, verify_series
from .coxeter import ArtinType
from .facts import Fact, fact_registry
from .table import AllcockRow, QUOTIENT_ORDERS, table_row


class RuleError(ValueError):
    pass


class ConstraintError(RuleError):
    """A rank or parameter constraint of the table or the type is violated."""


def vpf(t) -> str:
    return f"virtually poly-free({t})"


def torsion_free(t) -> str:
    return f"torsion-free({t})"


def poly_vf(group) -> str:
    return f"poly-VF with finitely presented series({group})"


def braid_group_name(o: OrbifoldDisc, n: int) -> str:
    return f"pi1orb(B_{n}({o}))"


def normal_in(t, o: OrbifoldDisc, n: int, quotient: str) -> str:
    return f"normal subgroup({t} <| {braid_group_name(o, n)}, quotient {quotient})"


@dataclass(frozen=True)
class Step:
    rule: str
    premises: tuple[str, ...]
    payload: dict = field(default_factory=dict)
    claim: str = ""

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "premises": list(self.premises),
            "payload": self.payload,
            "claim": self.claim,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Step":
        return cls(d["rule"], tuple(d["premises"]), d.get("payload", {}), d.get("claim", ""))


@dataclass(frozen=True)
class DerivationCert:
    artin_type: ArtinType
    steps: tuple[Step, ...]

    @property
    def conclusion(self) -> str:
        return vpf(self.artin_type)

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def to_dict(self) -> dict:
        return {
            "conclusion": self.conclusion,
            "type": self.artin_type.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DerivationCert":
        try:
            t = ArtinType.from_dict(d["type"])
            steps = tuple(Step.from_dict(s) for s in d["steps"])
        except (KeyError, TypeError) as e:
            raise SerializationError(f"malformed derivation: {e}") from e
        cert = cls(t, steps)
        if d.get("conclusion") != cert.conclusion:
            raise SerializationError(f"conclusion {d.get('conclusion')!r} does not match type {t}")
        return cert

    def dumps(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "DerivationCert":
        return cls.from_dict(loads(text))


# -- rules ---------------------------------------------------------------


def _type(payload: dict, key: str = "type") -> ArtinType:
    try:
        return ArtinType.from_dict(payload[key])
    except (KeyError, TypeError, ValueError) as e:
        raise RuleError(f"payload field {key!r}: {e}") from e


def _row(d: dict) -> AllcockRow:
    try:
        row = AllcockRow.from_dict(d)
    except (KeyError, TypeError, ValueError) as e:
        raise RuleError(f"unreadable table row: {e}") from e
    try:
        official = table_row(row.family)
    except KeyError:
        raise RuleError(f"no table row for {row.family}") from None
    if row != official:
        raise RuleError(f"row {row.to_dict()} does not match the embedding table")
    return row


def _table_step(step: Step) -> tuple[ArtinType, AllcockRow, int]:
    if step.rule != "R-Table":
        raise RuleError(f"expected an R-Table premise, got {step.rule}")
    t = _type(step.payload)
    row = _row(step.payload.get("row", {}))
    return t, row, row.braid_index(t)


def rule_fact(steps: list[Step], facts: list[Fact], payload: dict) -> str:
    if len(facts) != 1 or steps:
        raise RuleError("R-Fact takes exactly one fact premise")
    fact = facts[0]
    t = _type(payload)
    if not fact.covers(t.family):
        raise RuleError(f"fact {fact.id} does not cover type {t}")
    if fact.claim == "virtually poly-free":
        return vpf(t)
    if fact.claim == "torsion-free":
        return torsion_free(t)
    raise RuleError(f"fact {fact.id} is not citable on its own")


def rule_table(steps: list[Step], facts: list[Fact], payload: dict) -> str:
    if [f.id for f in facts] != ["All"] or steps:
        raise RuleError("R-Table takes the single premise fact:All")
    t = _type(payload)
    row = _row(payload.get("row", {}))
    if row.family != t.family:
        raise RuleError(f"row {row.label} does not apply to {t}")
    n = row.braid_index(t)
    if not row.allows(n):
        raise ConstraintError(f"{t}: the {row.label} row needs n > {row.n_greater_than}, got n = {n}")
    return normal_in(t, row.orbifold, n, row.quotient)


def rule_tower(steps: list[Step], facts: list[Fact], payload: dict) -> str:
    if len(steps) != 1 or facts:
        raise RuleError("R-Tower takes one R-Table premise")
    _, row, n = _table_step(steps[0])
    try:
        cert = PolySeriesCert.from_dict(payload["certificate"])
    except (KeyError, SerializationError, ValueError, TypeError) as e:
        raise RuleError(f"unreadable tower certificate: {e}") from e
    want = {"group": "B", "orbifold": row.orbifold.to_dict(), "n": n}
    if cert.subject != want:
        raise RuleError(f"tower certificate is for {cert.subject}, expected {want}")
    return poly_vf(braid_group_name(row.orbifold, n))


def rule_finite_index_transfer(steps: list[Step], facts: list[Fact], payload: dict) -> str:
    if len(steps) != 2 or facts:
        raise RuleError("R-FiniteIndexTransfer takes an R-Table and an R-Tower premise")
    table, tower = steps
    t, row, n = _table_step(table)
    if tower.rule != "R-Tower" or tower.claim != poly_vf(braid_group_name(row.orbifold, n)):
        raise RuleError("second premise must be the R-Tower step for the same braid group")
    if QUOTIENT_ORDERS[row.quotient] is None:
        raise RuleError(f"infinite quotient {row.quotient}: {t} does not have finite index")
    return poly_vf(t)


def rule_prop_fi(steps: list[Step], facts: list[Fact], payload: dict) -> str:
    if len(steps) != 2 or [f.id for f in facts] != ["SS"]:
        raise RuleError("R-PropFi takes a poly-VF step, a torsion-freeness step and fact:SS")
    t = _type(payload)
    if steps[0].claim != poly_vf(t):
        raise RuleError(f"first premise must conclude {poly_vf(t)}")
    if steps[1].claim != torsion_free(t):
        raise RuleError(f"second premise must conclude {torsion_free(t)}")
    return vpf(t)


def rule_subgroup(steps: list[Step], facts: list[Fact], payload: dict) -> str:
    """Virtual poly-freeness passes to subgroups.

    Sketch: if G' <= G has finite index and 1 = H_0 <| ... <| H_n = G'
    has free quotients, intersect each H_i with a subgroup A. Then
    (H_{i+1} n A)/(H_i n A) embeds in H_{i+1}/H_i, so it is free, and
    G' n A has finite index in A.
    """
    if len(steps) != 1 or len(facts) != 1:
        raise RuleError("R-Subgroup takes one step and one embedding fact")
    t = _type(payload, "subgroup")
    ambient = _type(payload, "ambient")
    if steps[0].claim != vpf(ambient):
        raise RuleError(f"premise must conclude {vpf(ambient)}")
    fact = facts[0]
    if fact.id == "CLL":
        if t.family != "G":
            raise RuleError(f"fact CLL is about G(de,e,r), not {t}")
        de, e, r = t.params
        if de % e or de // e < 2 or r < 2:
            raise ConstraintError(f"{t} needs d, r >= 2")
        if ambient != ArtinType("B", (r,)):
            raise RuleError(f"{t} embeds in B_{r}, not {ambient}")
    elif fact.id == "All":
        if t.family != "tildeA":
            raise RuleError(f"the table embedding is used only for tildeA here, not {t}")
        rows = [_row(r) for r in payload.get("rows", [])]
        if [r.family for r in rows] != ["tildeA", "B"]:
            raise RuleError("need the tildeA and B table rows")
        a_row, b_row = rows
        n = a_row.braid_index(t)
        if not a_row.allows(n):
            raise ConstraintError(f"{t}: the {a_row.label} row needs n > {a_row.n_greater_than}, got n = {n}")
        if not b_row.allows(n):
            raise ConstraintError(f"B_{n} row needs n > {b_row.n_greater_than}")
        # both rows live in the same braid group, which is A(B_n) itself
        if a_row.orbifold != b_row.orbifold or b_row.quotient != "trivial":
            raise RuleError("tildeA and B rows do not share an orbifold braid group")
        if ambient != ArtinType("B", (n,)):
            raise RuleError(f"{t} sits in B_{n}, not {ambient}")
    else:
        raise RuleError(f"fact {fact.id} is not an embedding")
    return vpf(t)


RULES = {
    "R-Fact": rule_fact,
    "R-Table": rule_table,
    "R-Tower": rule_tower,
    "R-FiniteIndexTransfer": rule_finite_index_transfer,
    "R-PropFi": rule_prop_fi,
    "R-Subgroup": rule_subgroup,
}


def _resolve(premises, earlier: list[Step]) -> tuple[list[Step], list[Fact]]:
    facts_db = fact_registry()
    steps, facts = [], []
    for ref in premises:
        kind, _, key = ref.partition(":")
        if kind == "fact":
            if key not in facts_db:
                raise RuleError(f"unknown fact {key!r}")
            facts.append(facts_db[key])
        elif kind == "step":
            if not key.isdigit() or not 1 <= int(key) <= len(earlier):
                raise RuleError(f"premise {ref!r} does not name an earlier step")
            steps.append(earlier[int(key) - 1])
        else:
            raise RuleError(f"bad premise reference {ref!r}")
    return steps, facts


def apply_rule(rule: str, premises, payload: dict, earlier: list[Step]) -> Step:
    """Build a step, computing its claim; raises :class:`RuleError` if the rule does not apply."""
    if rule not in RULES:
        raise RuleError(f"unknown rule {rule!r}")
    steps, facts = _resolve(premises, earlier)
    claim = RULES[rule](steps, facts, payload)
    return Step(rule, tuple(premises), payload, claim)


# -- derivations ---------------------------------------------------------


class _Builder:
    def __init__(self):
        self.steps: list[Step] = []

    def add(self, rule: str, premises, payload: dict) -> str:
        self.steps.append(apply_rule(rule, premises, payload, self.steps))
        return f"step:{len(self.steps)}"


def tower_route(t: ArtinType) -> list[Step]:
    """Table row, tower, finite-index transfer, torsion-freeness, passage to virtual poly-freeness."""
    row = table_row(t.family)
    b = _Builder()
    table = b.add("R-Table", ["fact:All"], {"type": t.to_dict(), "row": row.to_dict()})
    n = row.braid_index(t)
    cert = full_braid_cert(row.orbifold, n)
    tower = b.add("R-Tower", [table], {"certificate": cert.to_dict()})
    fit = b.add("R-FiniteIndexTransfer", [table, tower], {})
    tf = b.add("R-Fact", ["fact:AO"], {"type": t.to_dict()})
    b.add("R-PropFi", [fit, tf, "fact:SS"], {"type": t.to_dict()})
    return b.steps


def derive_poly_free(t: ArtinType) -> DerivationCert:
    b = _Builder()
    if t.is_finite_real:
        b.add("R-Fact", ["fact:Br"], {"type": t.to_dict()})
    elif t.family == "tildeA":
        a_row, b_row = table_row("tildeA"), table_row("B")
        n = a_row.braid_index(t)
        if not a_row.allows(n):
            raise ConstraintError(
                f"{t}: the {a_row.label} row needs n > {a_row.n_greater_than}, got n = {n}"
            )
        ambient = ArtinType("B", (n,))
        fact = b.add("R-Fact", ["fact:Br"], {"type": ambient.to_dict()})
        b.add(
            "R-Subgroup",
            [fact, "fact:All"],
            {
                "subgroup": t.to_dict(),
                "ambient": ambient.to_dict(),
                "rows": [a_row.to_dict(), b_row.to_dict()],
            },
        )
    elif t.family == "G":
        ambient = ArtinType("B", (t.params[2],))
        fact = b.add("R-Fact", ["fact:Br"], {"type": ambient.to_dict()})
        b.add("R-Subgroup", [fact, "fact:CLL"], {"subgroup": t.to_dict(), "ambient": ambient.to_dict()})
    else:
        row = table_row(t.family)
        n = row.braid_index(t)
        if not row.allows(n):
            raise ConstraintError(f"{t}: the {row.label} row needs n > {row.n_greater_than}, got n = {n}")
        b.steps = tower_route(t)
    return DerivationCert(t, tuple(b.steps))


def check_derivation(d: DerivationCert, config: Config | None = None) -> Report:
    """Re-validate every rule application and every embedded tower certificate."""
    rep = Report(f"derivation of {d.conclusion}")
    checked: list[Step] = []
    for i, step in enumerate(d.steps, 1):
        name = f"step {i} {step.rule}"
        try:
            redone = apply_rule(step.rule, step.premises, step.payload, checked)
        except RuleError as e:
            rep.add(name, FAIL, str(e))
            checked.append(step)
            continue
        same = redone.claim == step.claim
        rep.expect(name, same, step.claim if same else f"claims {step.claim!r}, rule gives {redone.claim!r}")
        if step.rule == "R-Tower":
            cert = PolySeriesCert.from_dict(step.payload["certificate"])
            sub = verify_series(cert, config)
            rep.add(f"{name} certificate", sub.overall, f"{len(sub.checks)} checks on {sub.subject}")
        # later steps see what this one actually proves, not what it claims
        checked.append(redone)
    last = d.steps[-1].claim if d.steps else None
    rep.expect("conclusion", last == d.conclusion, f"last step concludes {last!r}")
    return rep
