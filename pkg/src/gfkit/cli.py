"""gfkit command line: sequence tables, identity verification, remainder series.

Exit codes: 0 success (all checks green), 1 computation error or failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import identities as ids
from . import remainders as rem
from . import sequences as sq
from . import series as ps
from .exact import parse_rational

DEFAULT_ORDER = 64
DEFAULT_N_MAX = 50
DEFAULT_BOUND = 20

VERIFY_TARGETS = {
    "12": ids.IdentityId.ID12,
    "67": ids.IdentityId.ID67,
    "84": ids.IdentityId.ID84,
    "85": ids.IdentityId.ID85,
    "67r": ids.IdentityId.ID67R,
    "84r": ids.IdentityId.ID84R,
    "85r": ids.IdentityId.ID85R,
    "binomial-series": ids.IdentityId.BINOMIAL_SERIES,
    "deriv-limit": ids.IdentityId.DERIV_LIMIT,
    "cross-checks": ids.IdentityId.CROSS_CHECKS,
}

SERIES_BUILDERS = {
    "exp": "exp_cx",
    "log1p": "log1p",
    "log-geometric": "log_geometric",
    "geometric-pow": "geometric_pow",
    "monomial": "monomial",
    "constant": "constant",
}

REMAINDER_BASES = ("exp", "log", "log-over-x")


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _verify_target(text: str) -> str:
    key = text.lower().removeprefix("id")
    if key != "all" and key not in VERIFY_TARGETS:
        choices = ", ".join(["all", *VERIFY_TARGETS])
        raise argparse.ArgumentTypeError(f"unknown identity {text!r} (choose from {choices})")
    return key


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gfkit", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", type=Path, help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="tabulate a sequence family")
    p.add_argument("family", choices=[f.value for f in sq.Family])
    p.add_argument("--r", type=_rational_arg, default=None)
    p.add_argument("--s", type=_nonneg_int, default=0)
    p.add_argument("--m", type=_rational_arg, default=parse_rational("1"))
    p.add_argument("--t", type=_rational_arg, default=parse_rational("0"), help="argument of howard_A")
    p.add_argument("--k-max", type=_nonneg_int, default=DEFAULT_BOUND)
    p.add_argument("--m-max", type=_nonneg_int, default=DEFAULT_BOUND)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("identity", type=_verify_target, help="all, 12, 67, 84, 85, 67r, 84r, 85r, "
                   "binomial-series, deriv-limit or cross-checks")
    p.add_argument("--n-max", type=_nonneg_int, default=DEFAULT_N_MAX)
    p.add_argument("--series-max", type=_nonneg_int, default=15,
                   help="bound on n (and m) for the series-level checks")
    p.add_argument("--order", type=_nonneg_int, default=DEFAULT_ORDER)

    p = sub.add_parser("remainder", parents=[common], help="print a normalized remainder series")
    p.add_argument("base", choices=REMAINDER_BASES)
    p.add_argument("--r", type=_nonneg_int, required=True)
    p.add_argument("--order", type=_nonneg_int, default=DEFAULT_ORDER)

    p = sub.add_parser("series", parents=[common], help="print a built series")
    p.add_argument("builder", choices=list(SERIES_BUILDERS))
    p.add_argument("--c", type=_rational_arg, default=parse_rational("1"))
    p.add_argument("--r", type=_rational_arg, default=parse_rational("1"))
    p.add_argument("--d", type=_nonneg_int, default=1)
    p.add_argument("--order", type=_nonneg_int, default=DEFAULT_ORDER)
    return parser


def _render_table(args) -> tuple[str, int]:
    family = sq.Family(args.family)
    r = args.r if args.r is not None else parse_rational("1" if family is sq.Family.HOWARD_A else "0")
    entries = list(sq.table(family, k_max=args.k_max, m_max=args.m_max, r=r, s=args.s, m=args.m, t=args.t))
    if args.format == "json":
        return json.dumps([e.to_json() for e in entries], indent=2) + "\n", 0
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*sq.INDEX_NAMES[family], "value"])
        writer.writerows(e.csv_row() for e in entries)
        return buf.getvalue(), 0
    return "".join(f"{e}\n" for e in entries), 0


def _run_verify(args) -> list[ids.IdentityReport]:
    target = args.identity
    if target == "all":
        return ids.verify_all(args.n_max, args.series_max, args.order)
    identity = VERIFY_TARGETS[target]
    if identity is ids.IdentityId.BINOMIAL_SERIES:
        return [ids.verify_binomial_series_range(args.series_max, args.order)]
    if identity is ids.IdentityId.DERIV_LIMIT:
        return [ids.verify_derivative_limits(args.series_max)]
    if identity is ids.IdentityId.CROSS_CHECKS:
        return [ids.cross_check_suite()]
    return [ids.verify_identity(identity, args.n_max)]


def _render_verify(args) -> tuple[str, int]:
    reports = _run_verify(args)
    code = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return json.dumps([r.to_json() for r in reports], indent=2) + "\n", code
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "instances", "failures", "pass"])
        for r in reports:
            writer.writerow([r.identity.value, len(r.instances), len(r.failures), str(r.passed).lower()])
        return buf.getvalue(), code
    lines = [r.summary() for r in reports]
    for r in reports:
        for inst in r.failures[:10]:
            lines.append(f"  {r.identity.value} {inst.params}: lhs={inst.lhs} rhs={inst.rhs}")
    lines.append("all green" if code == 0 else "FAILED")
    return "\n".join(lines) + "\n", code


def _render_series(s: ps.PowerSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(s.to_json()) + "\n"
    if fmt == "csv":
        return "k,coefficient\n" + "".join(f"{k},{c}\n" for k, c in enumerate(s.coeffs))
    return ps.format_series(s, show_order=False) + "\n"


def _remainder_series(args) -> ps.PowerSeries:
    if args.base == "exp":
        return rem.exp_remainder(args.r, args.order)
    if args.base == "log":
        return rem.log_remainder(args.r, args.order)
    return rem.RemainderSpec(rem.Base.LOG1P_OVER_X, args.r).series(args.order)


def _built_series(args) -> ps.PowerSeries:
    kind = SERIES_BUILDERS[args.builder]
    return ps.build(kind, args.order, c=args.c, r=args.r, d=args.d)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            text, code = _render_table(args)
        elif args.command == "verify":
            text, code = _render_verify(args)
        elif args.command == "remainder":
            text, code = _render_series(_remainder_series(args), args.format), 0
        else:
            text, code = _render_series(_built_series(args), args.format), 0
    except (ValueError, ArithmeticError, IndexError) as exc:
        print(f"gfkit: error: {exc}", file=sys.stderr)
        return 1
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
