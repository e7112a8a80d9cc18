"""Command line front end.

    abelcap capable 2 2
    abelcap witness 2 6 6 --format json > fam.json
    abelcap verify fam.json 2 6 6 --mode d
    abelcap subgroups 2 4
    abelcap survey 72 --jobs 4

Exit status: 0 affirmative/verified, 1 negative/falsified, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from .abelian import (
    DEFAULT_BOUND,
    AbelianGroup,
    EnumerationBoundError,
    Subgroup,
    abelian_types,
    enumerate_subgroups,
    group_from_orders,
    quotient_invariants,
    subgroup_generated,
    subgroup_invariants,
)
from .capability import (
    capability_reason,
    exists_family_c,
    exists_family_d,
    is_capable,
    verify_family,
    witness_family,
)

OK, NEGATIVE, USAGE = 0, 1, 2


class FamilyParseError(ValueError):
    pass


def _fmt_factors(f: Sequence[int]) -> str:
    return "(" + ",".join(map(str, f)) + ")"


def _gen_lists(H: Subgroup) -> List[List[int]]:
    gens = H.generators() or [H.group.zero()]
    return [list(g.coords) for g in gens]


def format_family(family: Sequence[Subgroup], fmt: str = "text") -> str:
    """Serialize subgroups as generator lists (text lines or JSON)."""
    lists = [_gen_lists(H) for H in family]
    if fmt == "json":
        return json.dumps(lists)
    return "\n".join(";".join(",".join(map(str, g)) for g in gens) for gens in lists)


def _check_vector(G: AbelianGroup, vec, where: str):
    if len(vec) != G.rank:
        raise FamilyParseError(f"{where}: expected {G.rank} coordinates, got {len(vec)}")
    for c, n in zip(vec, G.factors):
        if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < n:
            raise FamilyParseError(f"{where}: coordinate {c!r} not in [0, {n})")


def parse_family(G: AbelianGroup, text: str) -> List[Subgroup]:
    """Parse a family file (text or JSON) into subgroups of ``G``."""
    if text.lstrip().startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise FamilyParseError(f"line {e.lineno}: invalid JSON: {e.msg}") from None
        if not isinstance(data, list):
            raise FamilyParseError("JSON family must be an array of subgroups")
        family = []
        for idx, gens in enumerate(data, 1):
            if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
                raise FamilyParseError(f"subgroup {idx}: expected an array of vectors")
            for g in gens:
                _check_vector(G, g, f"subgroup {idx}")
            family.append(subgroup_generated(G, [tuple(g) for g in gens]))
        return family

    family = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        gens = []
        for chunk in line.split(";"):
            parts = [p.strip() for p in chunk.split(",")]
            if not all(p.isdigit() for p in parts):
                raise FamilyParseError(f"line {lineno}: malformed generator {chunk.strip()!r}")
            vec = [int(p) for p in parts]
            _check_vector(G, vec, f"line {lineno}")
            gens.append(tuple(vec))
        family.append(subgroup_generated(G, gens))
    return family


def _group_from_args(parser, factors) -> AbelianGroup:
    try:
        return group_from_orders(factors)
    except ValueError as e:
        parser.error(str(e))


def cmd_capable(args) -> int:
    G = _group_from_args(args.parser, args.factors)
    verdict = capability_reason(G)
    if args.format == "json":
        print(json.dumps({"factors": list(G.factors), "capable": is_capable(G),
                          "verdict": verdict}))
    else:
        print(verdict)
        print(f"invariant factors: {_fmt_factors(G.factors)}")
    return OK if is_capable(G) else NEGATIVE


def cmd_witness(args) -> int:
    G = _group_from_args(args.parser, args.factors)
    if not is_capable(G):
        print(f"{_fmt_factors(G.factors)}: {capability_reason(G)}", file=sys.stderr)
        return NEGATIVE
    print(format_family(witness_family(G), args.format))
    return OK


def _print_report(G, report, fmt, mode):
    verdict = report.verdict_c if mode == "c" else report.verdict_d
    if fmt == "json":
        d = {"factors": list(G.factors), "mode": mode, **report.to_dict()}
        print(json.dumps(d))
        return
    print(f"factors: {_fmt_factors(G.factors)}")
    print(f"intersection_trivial={report.intersection_trivial}")
    print(f"generates={report.generates}")
    print(f"covers={report.covers}")
    print("quotient_exponents=" + " ".join(map(str, report.quotient_exponents)))
    print("quotient_invariants=" + " ".join(map(_fmt_factors, report.quotient_invariant_lists)))
    print("subgroup_invariants=" + " ".join(map(_fmt_factors, report.subgroup_invariant_lists)))
    print(f"verdict_c={report.verdict_c}")
    print(f"verdict_d={report.verdict_d}")
    print(f"mode {mode}: {'VERIFIED' if verdict else 'FAILED'}")


def cmd_verify(args) -> int:
    G = _group_from_args(args.parser, args.factors)
    try:
        if args.family == "-":
            text = sys.stdin.read()
        else:
            with open(args.family, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    try:
        family = parse_family(G, text)
    except FamilyParseError as e:
        print(f"error: {args.family}: {e}", file=sys.stderr)
        return USAGE
    if not family:
        print(f"error: {args.family}: empty family", file=sys.stderr)
        return USAGE
    report = verify_family(G, family)
    _print_report(G, report, args.format, args.mode)
    verdict = report.verdict_c if args.mode == "c" else report.verdict_d
    return OK if verdict else NEGATIVE


def cmd_subgroups(args) -> int:
    G = _group_from_args(args.parser, args.factors)
    try:
        subs = enumerate_subgroups(G, args.bound)
    except EnumerationBoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    rows = [{"basis": H.basis.tolist(), "order": H.order,
             "subgroup_invariants": list(subgroup_invariants(H)),
             "quotient_invariants": list(quotient_invariants(H))} for H in subs]
    if args.format == "json":
        print(json.dumps({"factors": list(G.factors), "subgroups": rows}))
    else:
        for r in rows:
            basis = json.dumps(r["basis"], separators=(",", ":"))
            print(f"{basis}\torder={r['order']}\t"
                  f"H={_fmt_factors(r['subgroup_invariants'])}\t"
                  f"G/H={_fmt_factors(r['quotient_invariants'])}")
    return OK


def survey_row(factors, bound=DEFAULT_BOUND):
    G = AbelianGroup(tuple(factors))
    return (tuple(factors), is_capable(G), exists_family_c(G, bound),
            exists_family_d(G, bound))


def cmd_survey(args) -> int:
    max_order = args.max_order_opt if args.max_order_opt is not None else args.max_order
    if max_order is None:
        args.parser.error("survey needs a maximum order")
    if max_order < 1:
        args.parser.error("maximum order must be >= 1")
    if max_order > args.bound:
        print(f"error: max order {max_order} exceeds the enumeration bound {args.bound}",
              file=sys.stderr)
        return USAGE
    types = abelian_types(max_order)
    bounds = [args.bound] * len(types)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(survey_row, types, bounds, chunksize=4))
    else:
        rows = list(map(survey_row, types, bounds))

    yn = {True: "yes", False: "no"}
    width = max(len(_fmt_factors(f)) for f, *_ in rows)
    print(f"{'factors':<{width}}  capable  c    d")
    bad = None
    for f, cap, c, d in rows:
        print(f"{_fmt_factors(f):<{width}}  {yn[cap]:<7}  {yn[c]:<3}  {yn[d]}")
        if bad is None and not cap == c == d:
            bad = f
    if bad is None:
        print(f"EQUIVALENCE HOLDS ({len(rows)} types, order <= {max_order})")
        return OK
    print(f"COUNTEREXAMPLE: {_fmt_factors(bad)}")
    return NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelcap", description="Capability of finite abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def factors_arg(p):
        p.add_argument("factors", nargs="+", type=int, metavar="N",
                       help="cyclic orders (normalized to invariant factors)")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    bound = argparse.ArgumentParser(add_help=False)
    bound.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                       help="largest group order for exhaustive enumeration")

    p = sub.add_parser("capable", parents=[fmt], help="decide capability")
    factors_arg(p)
    p.set_defaults(func=cmd_capable)

    p = sub.add_parser("witness", parents=[fmt], help="emit a witness family")
    factors_arg(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[fmt], help="check a family file")
    p.add_argument("family", help="family file (text or JSON), '-' for stdin")
    factors_arg(p)
    p.add_argument("--mode", choices=("c", "d"), default="d")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("subgroups", parents=[fmt, bound], help="list all subgroups")
    factors_arg(p)
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("survey", parents=[bound], help="check the equivalence for all small types")
    p.add_argument("max_order", nargs="?", type=int)
    p.add_argument("--max-order", dest="max_order_opt", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.parser = parser
        return args.func(args)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK


if __name__ == "__main__":
    sys.exit(main())
