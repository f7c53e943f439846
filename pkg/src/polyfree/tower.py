"""Normal-series certificates for pure and full orbifold braid groups.

For S = C(m,k;q), forgetting the last point of an ordered configuration
gives PB_j(S) -> PB_{j-1}(S) with kernel pi_1^orb of S minus j-1 regular
points, i.e. C(m+j-1,k;q). Stacking these for j = n..2 on top of
PB_1(S) = S gives a series whose layers are the virtually free groups
F_{m+j-1} * Z/q_1 * ... * Z/q_k. The full braid group adds S_n on top.

Only the isomorphism types of the layers are recorded; the extensions
themselves are not.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .config import Config
from .enumerate import stallings_fold
from .orbifold import (
    OrbifoldDisc,
    VFCert,
    euler_characteristic,
    free_subgroup_cert,
    orb_fundamental_group,
    puncture_regular,
    verify_vf_cert,
)
from .presentation import free_group
from .report import Report
from .serialize import SerializationError, dumps, loads, parse_rational, rational_str, require_int

VF, FREE, FINITE = "vf", "free", "finite"


@dataclass(frozen=True)
class LayerCert:
    kind: str
    orbifold: OrbifoldDisc | None = None
    kernel_index: int | None = None
    kernel_rank: int | None = None
    euler_characteristic: Fraction | None = None
    rank: int | None = None
    order: int | None = None
    name: str | None = None

    @classmethod
    def virtually_free(cls, o: OrbifoldDisc) -> "LayerCert":
        c = free_subgroup_cert(orb_fundamental_group(o))
        return cls(VF, o, c.kernel_index, c.kernel_rank, euler_characteristic(c.group))

    @classmethod
    def free(cls, rank: int) -> "LayerCert":
        return cls(FREE, rank=rank)

    @classmethod
    def finite(cls, order: int, name: str) -> "LayerCert":
        return cls(FINITE, order=order, name=name)

    def vf_cert(self) -> VFCert:
        return VFCert(orb_fundamental_group(self.orbifold), self.kernel_index, self.kernel_rank)

    def describe(self) -> str:
        if self.kind == VF:
            return f"{orb_fundamental_group(self.orbifold)} [pi_1 of {self.orbifold}]"
        if self.kind == FREE:
            return f"F_{self.rank}"
        return f"{self.name} (order {self.order})"

    def to_dict(self) -> dict:
        if self.kind == VF:
            return {
                "kind": VF,
                "orbifold": self.orbifold.to_dict(),
                "kernelIndex": self.kernel_index,
                "kernelRank": self.kernel_rank,
                "eulerCharacteristic": rational_str(self.euler_characteristic),
            }
        if self.kind == FREE:
            return {"kind": FREE, "rank": self.rank}
        return {"kind": FINITE, "order": self.order, "name": self.name}

    @classmethod
    def from_dict(cls, d: dict) -> "LayerCert":
        kind = d.get("kind")
        if kind == VF:
            return cls(
                VF,
                OrbifoldDisc.from_dict(d["orbifold"]),
                require_int(d, "kernelIndex"),
                require_int(d, "kernelRank"),
                parse_rational(d["eulerCharacteristic"]),
            )
        if kind == FREE:
            return cls(FREE, rank=require_int(d, "rank"))
        if kind == FINITE:
            return cls(FINITE, order=require_int(d, "order"), name=str(d["name"]))
        raise SerializationError(f"unknown layer kind {kind!r}")


@dataclass(frozen=True)
class PolySeriesCert:
    """Layers bottom-up: ``layers[0]`` is H_1/H_0, ``layers[-1]`` is H_n/H_{n-1}."""

    subject: dict
    layers: tuple[LayerCert, ...] = field(default=())

    @property
    def length(self) -> int:
        return len(self.layers)

    def to_dict(self) -> dict:
        return {"subject": self.subject, "layers": [layer.to_dict() for layer in self.layers]}

    @classmethod
    def from_dict(cls, d: dict) -> "PolySeriesCert":
        if not isinstance(d, dict) or "layers" not in d or "subject" not in d:
            raise SerializationError("certificate needs 'subject' and 'layers'")
        return cls(d["subject"], tuple(LayerCert.from_dict(x) for x in d["layers"]))

    def dumps(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "PolySeriesCert":
        return cls.from_dict(loads(text))


def length_of(c: PolySeriesCert) -> int:
    """Number of layers of this certificate (not a minimum over all series)."""
    return c.length


def _subject(group: str, s: OrbifoldDisc, n: int) -> dict:
    return {"group": group, "orbifold": s.to_dict(), "n": n}


def pure_braid_tower(s: OrbifoldDisc, n: int) -> PolySeriesCert:
    if n < 1:
        raise ValueError("need at least one strand")
    layers = tuple(LayerCert.virtually_free(puncture_regular(s, j - 1)) for j in range(n, 0, -1))
    return PolySeriesCert(_subject("PB", s, n), layers)


def full_braid_cert(s: OrbifoldDisc, n: int) -> PolySeriesCert:
    pure = pure_braid_tower(s, n)
    top = LayerCert.finite(math.factorial(n), f"S_{n}")
    return PolySeriesCert(_subject("B", s, n), pure.layers + (top,))


def verify_layer(layer: LayerCert, config: Config | None = None) -> Report:
    if layer.kind == VF:
        rep = verify_vf_cert(layer.vf_cert(), config)
        chi = euler_characteristic(orb_fundamental_group(layer.orbifold))
        rep.expect("recorded euler characteristic", layer.euler_characteristic == chi,
                   f"recorded {layer.euler_characteristic}, computed {chi}")
        return rep
    rep = Report(layer.describe())
    if layer.kind == FREE:
        ok = layer.rank is not None and layer.rank >= 0
        rep.expect("free rank is a nonnegative integer", ok, str(layer.rank))
        if ok:
            f = free_group(layer.rank)
            folded = stallings_fold(f, [(i + 1,) for i in range(layer.rank)])
            rep.expect("folded rank", folded.rank == layer.rank, str(folded.rank))
    elif layer.kind == FINITE:
        rep.expect("finite order >= 1", layer.order is not None and layer.order >= 1, str(layer.order))
    else:
        rep.add("layer kind", "fail", repr(layer.kind))
    return rep


def verify_series(c: PolySeriesCert, config: Config | None = None) -> Report:
    """Check every layer, then the bookkeeping tying layers to the subject."""
    rep = Report(f"normal series for {_subject_text(c.subject)}")
    for i, layer in enumerate(c.layers):
        rep.extend(verify_layer(layer, config), prefix=f"layer {i + 1}: ")
    _check_structure(c, rep)
    return rep


def _subject_text(subject: dict) -> str:
    try:
        o = OrbifoldDisc.from_dict(subject["orbifold"])
        return f"{subject['group']}_{subject['n']}({o})"
    except (KeyError, TypeError, ValueError):
        return str(subject)


def _check_structure(c: PolySeriesCert, rep: Report) -> None:
    try:
        group = c.subject["group"]
        s = OrbifoldDisc.from_dict(c.subject["orbifold"])
        n = c.subject["n"]
    except (KeyError, TypeError, ValueError) as e:
        rep.add("structure: subject", "fail", f"unreadable subject: {e}")
        return
    if group not in ("PB", "B") or not isinstance(n, int) or n < 1:
        rep.add("structure: subject", "fail", f"group {group!r}, n {n!r}")
        return
    expected_len = n if group == "PB" else n + 1
    rep.expect("structure: length", c.length == expected_len, f"{c.length} layers, expected {expected_len}")
    for i, layer in enumerate(c.layers[:n]):
        want = puncture_regular(s, n - 1 - i)
        ok = layer.kind == VF and layer.orbifold == want
        got = layer.orbifold if layer.kind == VF else layer.kind
        rep.expect(f"structure: layer {i + 1}", ok, f"{got}, expected {want}")
    if group == "B" and c.length == n + 1:
        top = c.layers[-1]
        ok = top.kind == FINITE and top.order == math.factorial(n) and top.name == f"S_{n}"
        rep.expect(f"structure: layer {n + 1}", ok, f"{top.describe()}, expected S_{n}")
