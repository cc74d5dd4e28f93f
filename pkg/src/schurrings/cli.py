"""Command line entry point: ``srl <subcommand> ...`` or ``python -m schurrings``.

Exit codes: 0 success, 1 a mathematical verdict contradicted what the
command asserted, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import constructions as cons
from .config import LIMITS, CapExceeded
from .groups import dump_group, group_from_spec
from .srings import AxiomViolation, from_partition, parse_partition

FAMILIES = {
    "d8zp": (cons.d8zp_group, cons.d8zp_sring),
    "q8zp-l4": (cons.q8zp_group, cons.q8zp_l4),
    "q8zp-l6": (cons.q8zp_group, cons.q8zp_l6),
}


class UsageError(Exception):
    pass


def _emit(args, record: dict, lines: list[str] | None = None) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        for line in lines if lines is not None else [f"{k}={v}" for k, v in record.items()]:
            print(line)


def _infer_p(spec: str | None) -> int | None:
    if not spec:
        return None
    m = re.search(r"C(\d+)$", spec)
    return int(m.group(1)) if m else None


def _load_ring(args):
    """The S-ring named by ``--family/--p`` or by ``--group`` plus a partition file or stdin."""
    if getattr(args, "family", None):
        if args.family not in FAMILIES:
            raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
        p = args.p or _infer_p(args.group)
        if p is None:
            raise UsageError("--p is required for a family")
        make_group, make_ring = FAMILIES[args.family]
        if args.group and group_from_spec(args.group).order != make_group(p).order:
            raise UsageError(f"family {args.family} at p={p} does not live on {args.group}")
        return make_ring(p)
    if not args.group:
        raise UsageError("--group is required")
    G = group_from_spec(args.group)
    if args.partition in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.partition) as fh:
            text = fh.read()
    return from_partition(G, parse_partition(text))


def cmd_group(args) -> int:
    sys.stdout.write(dump_group(group_from_spec(args.spec)))
    return 0


def cmd_construct(args) -> int:
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    sys.stdout.write(FAMILIES[args.family][1](args.p).partition_text())
    return 0


def cmd_verify(args) -> int:
    try:
        A = _load_ring(args)
    except AxiomViolation as exc:
        _emit(args, {"valid": False, "axiom": exc.axiom, "witness": str(exc.witness)})
        return 1
    _emit(args, {"valid": True, "group": A.group.label, "rank": A.rank})
    return 0


def cmd_constants(args) -> int:
    A = _load_ring(args)
    c = A.constants
    entries = [(X, Y, Z, int(c[X, Y, Z])) for X in range(A.rank) for Y in range(A.rank) for Z in range(A.rank) if c[X, Y, Z]]
    if args.json:
        print(json.dumps({"rank": A.rank, "nonzero": entries}))
    else:
        print(f"rank={A.rank}")
        for X, Y, Z, v in entries:
            print(f"c X={X} Y={Y} Z={Z} value={v}")
    return 0


def cmd_autgroup(args) -> int:
    from .automorphisms import automorphism_group

    A = _load_ring(args)
    aut = automorphism_group(A)
    gens = sorted(aut.stabilizer.generators)
    record = {
        "order": aut.order(),
        "stabilizer_order": aut.stabilizer_order,
        "stabilizer_generators": [" ".join(map(str, g)) for g in gens],
    }
    lines = [f"order={record['order']}", f"stabilizer_order={record['stabilizer_order']}"]
    lines += [f"generator={g}" for g in record["stabilizer_generators"]]
    _emit(args, record, lines)
    return 0


def cmd_schurity(args) -> int:
    from .automorphisms import is_schurian

    A = _load_ring(args)
    rep = is_schurian(A)
    record = {
        "verdict": "schurian" if rep.schurian else "nonschurian",
        "aut_order": rep.aut_order,
        "orbits": [list(o) for o in rep.orbits],
        "split_class": list(rep.split_class) if rep.split_class else None,
        "split_pieces": [list(p) for p in rep.split_pieces],
    }
    _emit(args, record, rep.lines())
    if args.expect and args.expect != record["verdict"]:
        return 1
    return 0


def cmd_census(args) -> int:
    from .enumeration import schurity_census

    rep = schurity_census(group_from_spec(args.group))
    record = {
        "group": rep.label,
        "total": rep.total,
        "schurian": rep.schurian,
        "nonschurian": rep.nonschurian,
        "rank_histogram": rep.rank_histogram,
    }
    _emit(args, record, rep.lines())
    return 0 if rep.is_schur else 1


def cmd_cyclotomy(args) -> int:
    from .cyclotomy import sweep

    reports = sweep(args.l, args.pmax)
    for r in reports:
        if args.json:
            print(json.dumps({"p": r.p, "l": r.l, "m": r.m, "r": r.r, "s": r.s, "t": r.t, "u": r.u,
                              "alternative": r.alternative, "verdicts": r.verdicts}, sort_keys=True))
        else:
            print(r.line())
    return 0 if all(r.ok for r in reports) else 1


def cmd_paper_suite(args) -> int:
    from .suite import run_paper_suite

    results = run_paper_suite()
    for num, name, ok, detail in results:
        if args.json:
            print(json.dumps({"criterion": num, "name": name, "passed": ok, "detail": detail}))
        else:
            print(f"criterion={num} name={name} status={'pass' if ok else 'fail'} detail={detail}")
    return 0 if all(ok for *_, ok, _ in results) else 1


def _ring_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--group", help="group spec, e.g. D8xC5")
    sp.add_argument("--partition", help="partition file ('-' or omitted: stdin)")
    sp.add_argument("--family", help="d8zp, q8zp-l4 or q8zp-l6")
    sp.add_argument("--p", type=int, help="prime parameter of the family")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON records")
    common.add_argument("--max-order", type=int, help="cap on group order for automorphism searches")
    common.add_argument("--time-budget-secs", type=float, help="time budget per automorphism search")
    common.add_argument("--threads", type=int, help="accepted for compatibility; searches run single-threaded")

    ap = argparse.ArgumentParser(prog="srl", description="Schur ring construction and schurity testing")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("group", parents=[common], help="dump a multiplication table")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("construct", parents=[common], help="emit the partition of a built-in family")
    sp.add_argument("family")
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_construct)

    for name, func, hlp in [
        ("verify", cmd_verify, "check the S-ring axioms"),
        ("constants", cmd_constants, "print nonzero structure constants"),
        ("autgroup", cmd_autgroup, "compute the automorphism group"),
        ("schurity", cmd_schurity, "decide schurity"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=hlp)
        _ring_args(sp)
        if name == "schurity":
            sp.add_argument("--expect", choices=["schurian", "nonschurian"])
        sp.set_defaults(func=func)

    sp = sub.add_parser("census", parents=[common], help="enumerate S-rings and count nonschurian ones")
    sp.add_argument("--group", required=True)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("cyclotomy", parents=[common], help="cyclotomic identity sweep")
    sp.add_argument("--l", type=int, choices=[4, 6], required=True)
    sp.add_argument("--pmax", type=int, required=True)
    sp.set_defaults(func=cmd_cyclotomy)

    sp = sub.add_parser("paper-suite", parents=[common], help="run every acceptance check")
    sp.set_defaults(func=cmd_paper_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_order is not None:
        LIMITS.max_sring_order = args.max_order
    if args.time_budget_secs is not None:
        LIMITS.time_budget_secs = args.time_budget_secs
    try:
        return args.func(args)
    except AxiomViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
