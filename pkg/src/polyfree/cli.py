"""Command-line interface: ``polyfree <area> <command> ...``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .artin import (
    ArtinType,
    DerivationCert,
    RuleError,
    UnsupportedType,
    artin_presentation,
    check_derivation,
    coxeter_matrix,
    derive_poly_free,
    prop_fi_demo,
)
from .config import Config
from .enumerate import membership, stallings_fold, todd_coxeter
from .orbifold import OrbifoldDisc, free_subgroup_cert, orb_fundamental_group, verify_vf_cert
from .presentation import Presentation
from .report import FAIL, INCONCLUSIVE, PASS, Report
from .serialize import SerializationError, dumps, loads
from .snf import abelianization
from .tower import PolySeriesCert, full_braid_cert, pure_braid_tower, verify_series

log = logging.getLogger("polyfree")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def exit_code(report: Report) -> int:
    return {PASS: EXIT_OK, FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}[report.overall]


def _emit(args, text: str, data) -> None:
    if args.json:
        sys.stdout.write(dumps(data))
    else:
        print(text)


def _emit_report(args, report: Report) -> int:
    _emit(args, report.render(), report.to_dict())
    return exit_code(report)


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _read_json(source: str):
    text = source if source.lstrip().startswith("{") else Path(source).read_text()
    return loads(text)


def _presentation(source: str) -> Presentation:
    try:
        return Presentation.from_dict(_read_json(source))
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"bad presentation: {e}") from e


def _artin_type(args) -> ArtinType:
    text = args.type
    if args.rank is not None:
        text = f"I2({args.rank})" if text == "I2" else f"{text}_{args.rank}"
    try:
        return ArtinType.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from e


# -- commands ------------------------------------------------------------


def cmd_orbifold_info(args, config: Config) -> int:
    o = OrbifoldDisc.parse(args.orbifold)
    g = orb_fundamental_group(o)
    c = free_subgroup_cert(g)
    chi = g.euler_characteristic
    data = {
        "orbifold": o.to_dict(),
        "group": str(g),
        "presentation": g.presentation.to_dict(),
        "eulerCharacteristic": str(chi),
        "kernelIndex": c.kernel_index,
        "kernelRank": c.kernel_rank,
    }
    text = "\n".join(
        [
            f"orbifold: {o}",
            f"group: {g}",
            f"presentation: {g.presentation}",
            f"euler characteristic: {chi}",
            f"kernel index: {c.kernel_index}",
            f"kernel rank: {c.kernel_rank}",
        ]
    )
    if not args.verify:
        _emit(args, text, data)
        return EXIT_OK
    rep = verify_vf_cert(c, config)
    data["report"] = rep.to_dict()
    _emit(args, text + "\n" + rep.render(), data)
    return exit_code(rep)


def cmd_tower_build(args, config: Config) -> int:
    o = OrbifoldDisc.parse(args.orbifold)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    cert = pure_braid_tower(o, args.n) if args.pure else full_braid_cert(o, args.n)
    _write(args, cert.dumps())
    return EXIT_OK


def cmd_tower_verify(args, config: Config) -> int:
    cert = PolySeriesCert.loads(Path(args.cert).read_text())
    return _emit_report(args, verify_series(cert, config))


def cmd_artin_present(args, config: Config) -> int:
    t = _artin_type(args)
    m = coxeter_matrix(t)
    p = artin_presentation(m)
    ab = abelianization(p)
    data = {
        "type": str(t),
        "coxeterMatrix": [["inf" if x is None else x for x in row] for row in m],
        "presentation": p.to_dict(),
        "abelianization": {"freeRank": ab.free_rank, "torsion": list(ab.torsion)},
    }
    text = f"{t}: {p}\nabelianization: {ab}"
    _emit(args, text, data)
    return EXIT_OK


def cmd_artin_derive(args, config: Config) -> int:
    t = _artin_type(args)
    try:
        d = derive_poly_free(t)
    except RuleError as e:
        raise UsageError(str(e)) from e
    _write(args, d.dumps())
    return EXIT_OK


def cmd_artin_check(args, config: Config) -> int:
    d = DerivationCert.loads(Path(args.cert).read_text())
    return _emit_report(args, check_derivation(d, config))


def cmd_group_abelianize(args, config: Config) -> int:
    p = _presentation(args.presentation)
    ab = abelianization(p)
    _emit(args, str(ab), {"freeRank": ab.free_rank, "torsion": list(ab.torsion)})
    return EXIT_OK


def cmd_group_enumerate(args, config: Config) -> int:
    p = _presentation(args.presentation)
    sub = [p.word(w) for w in args.subgroup]
    t = todd_coxeter(p, sub, max_cosets=config.max_cosets)
    data = t.to_dict()
    text = (
        f"index {t.index}\n" + "\n".join(" ".join(map(str, row)) for row in t.table)
        if t.complete
        else f"coset limit {config.max_cosets} reached"
    )
    _emit(args, text, data)
    return EXIT_OK if t.complete else EXIT_INCONCLUSIVE


def cmd_group_fold(args, config: Config) -> int:
    p = _presentation(args.presentation)
    if not p.is_free:
        raise UsageError("folding needs a presentation without relators")
    g = stallings_fold(p, [p.word(w) for w in args.subgroup])
    data = {
        "vertices": g.nvertices,
        "edges": [list(e) for e in g.edges],
        "rank": g.rank,
        "index": g.index,
        "basis": [p.format(w) for w in g.basis()],
    }
    if args.member:
        data["member"] = {w: membership(g, p.word(w)) for w in args.member}
    text = f"rank {g.rank}, index {g.index if g.index is not None else 'infinite'}\nbasis: {', '.join(data['basis'])}"
    if args.member:
        text += "\n" + "\n".join(f"{w}: {v}" for w, v in data["member"].items())
    _emit(args, text, data)
    return EXIT_OK


def cmd_propfi_demo(args, config: Config) -> int:
    p = _presentation(args.presentation)
    demo = prop_fi_demo(p, args.bound or config.low_index_bound, config)
    data = demo.report.to_dict()
    data["coreIndex"] = demo.index
    data["freeRank"] = demo.free_rank
    text = demo.report.render() + f"\ncore index {demo.index}, free rank {demo.free_rank}"
    _emit(args, text, data)
    return exit_code(demo.report)


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-cosets", type=int, help="coset enumeration limit")
    common.add_argument("--tietze-budget", type=int, help="Tietze move budget")
    common.add_argument("--low-index-bound", type=int, help="default index bound for low-index search")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="polyfree", description=__doc__)
    areas = parser.add_subparsers(dest="area", required=True)

    def sub(area, name, func, help):
        sp = area.add_parser(name, help=help, parents=[common])
        sp.set_defaults(func=func)
        return sp

    orb = areas.add_parser("orbifold").add_subparsers(dest="cmd", required=True)
    sp = sub(orb, "info", cmd_orbifold_info, "group, Euler characteristic and free-subgroup data")
    sp.add_argument("orbifold", help="compact form m,k;q1,...,qk, e.g. '1,1;2'")
    sp.add_argument("--verify", action="store_true", help="also run the enumeration checks")

    tower = areas.add_parser("tower").add_subparsers(dest="cmd", required=True)
    sp = sub(tower, "build", cmd_tower_build, "build a normal-series certificate")
    sp.add_argument("--orbifold", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--pure", action="store_true", help="pure braid group (no S_n layer)")
    sp.add_argument("--out")
    sp = sub(tower, "verify", cmd_tower_verify, "verify a certificate file")
    sp.add_argument("cert")

    artin = areas.add_parser("artin").add_subparsers(dest="cmd", required=True)
    for name, func, help in (
        ("present", cmd_artin_present, "Artin presentation of a type"),
        ("derive", cmd_artin_derive, "derive virtual poly-freeness"),
    ):
        sp = sub(artin, name, func, help)
        sp.add_argument("--type", required=True, help="family (tildeB) or full type (G(4,2,2))")
        sp.add_argument("--rank", type=int)
        if name == "derive":
            sp.add_argument("--out")
    sp = sub(artin, "check", cmd_artin_check, "check a derivation file")
    sp.add_argument("cert")

    group = areas.add_parser("group").add_subparsers(dest="cmd", required=True)
    sp = sub(group, "abelianize", cmd_group_abelianize, "abelian invariants")
    sp.add_argument("presentation", help="JSON file or inline JSON")
    sp = sub(group, "enumerate", cmd_group_enumerate, "Todd-Coxeter coset table")
    sp.add_argument("presentation")
    sp.add_argument("--subgroup", action="append", default=[], help="subgroup generator word")
    sp = sub(group, "fold", cmd_group_fold, "Stallings folding in a free group")
    sp.add_argument("presentation")
    sp.add_argument("--subgroup", action="append", default=[])
    sp.add_argument("--member", action="append", default=[], help="word to test for membership")

    propfi = areas.add_parser("propfi").add_subparsers(dest="cmd", required=True)
    sp = sub(propfi, "demo", cmd_propfi_demo, "characteristic core demo")
    sp.add_argument("presentation")
    sp.add_argument("--bound", type=int)
    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING)
    try:
        config = Config.from_env(
            max_cosets=args.max_cosets,
            tietze_budget=args.tietze_budget,
            low_index_bound=args.low_index_bound,
            output_path=getattr(args, "out", None),
            verbosity=args.verbose,
        )
        return args.func(args, config)
    except (UsageError, SerializationError, UnsupportedType, ValueError, KeyError, OSError) as e:
        print(f"polyfree: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
