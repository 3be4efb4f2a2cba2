"""Command-line interface.

Exit codes: 0 success, 1 verified failure (violation or deviation),
2 usage or input error. Results go to stdout (or ``--out``), diagnostics to
stderr.
"""

import argparse
import json
import math
import sys
from pathlib import Path

from .catalog import DEFAULT_TOL, PRIOR_MODES, family_slacks, sweep
from .errors import QdistError
from .families import FAMILIES, family_point
from .hot import hot_s, hot_series, hot_upper, pinsker_lower
from .measures import measure_report
from .states import (
    dumps_matrix,
    make_weighted_pair,
    random_mixed,
    random_pure,
    read_matrix,
    validate_density,
    write_matrix,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
REPORT_FIELDS = ("L", "T", "F", "Q", "Q_min", "s_star", "C", "S")
DEFAULT_T_GRID = tuple(i / 10 for i in range(11))
DEFAULT_X_GRID = tuple(i / 10 for i in range(10))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return format(x, ".12g")
    return str(x)


def _json_value(x):
    if isinstance(x, float):
        if not math.isfinite(x):
            return fmt(x)
        return float(format(x, ".12g"))
    return x


def render(rows, columns, out_format: str) -> str:
    if out_format == "json":
        data = [{c: _json_value(r[c]) for c in columns} for r in rows]
        return json.dumps(data, indent=2) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(fmt(r[c]) for c in columns) for r in rows]
    return "\n".join(lines) + "\n"


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc}") from exc


def _float_list(text: str):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _int_list(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _load_state(path: str):
    try:
        return validate_density(read_matrix(path))
    except OSError as exc:
        raise UsageError(f"{path}: cannot read file: {exc}") from exc
    except QdistError as exc:
        raise UsageError(f"{path}: {type(exc).__name__}: {exc}") from exc


def cmd_compute(args) -> int:
    rho = _load_state(args.rho)
    sigma = _load_state(args.sigma)
    if rho.dim != sigma.dim:
        raise UsageError(f"{args.sigma}: dimension {sigma.dim} does not match {args.rho} ({rho.dim})")
    try:
        pair = make_weighted_pair(rho, sigma, args.prior)
    except QdistError as exc:
        raise UsageError(str(exc)) from exc
    report = measure_report(pair).as_dict()
    if args.format == "json":
        text = json.dumps({k: _json_value(report[k]) for k in REPORT_FIELDS}, indent=2) + "\n"
    else:
        text = render([report], REPORT_FIELDS, "csv")
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.tol > 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    if not args.dims or min(args.dims) < 2:
        raise UsageError("--dims must list integers >= 2")
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    modes = PRIOR_MODES if args.prior == "both" else (args.prior,)
    report = None
    for mode in modes:
        part = sweep(args.dims, args.samples, mode, args.seed, args.tol)
        report = part if report is None else report.merge(part)
    if args.format == "json":
        text = json.dumps(report.to_rows(), indent=2) + "\n"
    else:
        text = report.to_csv()
    _emit(text, args.out)
    if not report.passed:
        print(f"verify: {report.total_violations} violation(s)", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


FAMILY_COLUMNS = (
    ["t"]
    + [f"{k}" for k in REPORT_FIELDS if k != "s_star"]
    + [f"{k}_expected" for k in REPORT_FIELDS if k != "s_star"]
    + ["max_deviation", "max_equality_slack"]
)


def _deviation(computed: float, expected: float) -> float:
    if math.isinf(expected) or math.isinf(computed):
        return 0.0 if computed == expected else math.inf
    return abs(computed - expected)


def cmd_families(args) -> int:
    if not args.tol > 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    families = FAMILIES if args.family == "all" else (args.family,)
    rows, ok = [], True
    for family in families:
        for t in args.t_grid:
            if not 0.0 <= t <= 1.0:
                raise UsageError(f"t must lie in [0, 1], got {t}")
            point = family_point(family, t)
            got = measure_report(point.pair())
            row = {"family": family, "t": t}
            dev = 0.0
            for k in REPORT_FIELDS:
                if k == "s_star":
                    continue
                c, e = getattr(got, k), getattr(point.expected, k)
                row[k], row[f"{k}_expected"] = c, e
                dev = max(dev, _deviation(c, e))
            slacks = [abs(s) for _, s in family_slacks(family, t, args.tol)]
            row["max_deviation"] = dev
            row["max_equality_slack"] = max(slacks) if slacks else 0.0
            ok &= dev <= args.tol and row["max_equality_slack"] <= args.tol
            rows.append(row)
    _emit(render(rows, ["family"] + FAMILY_COLUMNS, args.format), args.out)
    if not ok:
        print("families: deviation above tolerance", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


HOT_COLUMNS = ("x", "s", "series", "pinsker", "upper")


def cmd_hot(args) -> int:
    rows = []
    for x in args.x_grid:
        if not 0.0 <= x < 1.0:
            raise UsageError(f"x must lie in [0, 1), got {x}")
        rows.append({"x": x, "s": hot_s(x), "series": hot_series(x),
                     "pinsker": pinsker_lower(x), "upper": hot_upper(x)})
    _emit(render(rows, HOT_COLUMNS, args.format), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.dim is None or args.dim < 1:
        raise UsageError("--dim must be a positive integer")
    try:
        if args.kind == "pure":
            state = random_pure(args.dim, args.seed)
        else:
            rank = args.dim if args.rank is None else args.rank
            state = random_mixed(args.dim, rank, args.seed)
    except (QdistError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.out is None:
        sys.stdout.write(dumps_matrix(state.matrix))
        return EXIT_OK
    try:
        write_matrix(args.out, state.matrix)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qdistinguish", description="Quantum state distinguishability measures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="all measures for a pair of state files")
    p.add_argument("--rho", required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--prior", type=float, default=0.5, help="prior probability of rho")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="randomized check of the inequality catalog")
    p.add_argument("--dims", type=_int_list, default=[2, 3, 4])
    p.add_argument("--samples", type=int, default=1000, help="samples per dimension")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--prior", choices=("uniform", "random", "both"), default="both")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="closed-form regression on the equality families")
    p.add_argument("--family", choices=FAMILIES + ("all",), default="all")
    p.add_argument("--t-grid", type=_float_list, default=list(DEFAULT_T_GRID))
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("hot", help="tabulate the HOT function and its envelopes")
    p.add_argument("--x-grid", type=_float_list, default=list(DEFAULT_X_GRID))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hot)

    p = sub.add_parser("gen", help="write a random state file")
    p.add_argument("--kind", choices=("pure", "mixed"), default="mixed")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qdistinguish {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
