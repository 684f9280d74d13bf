"""Command-line front end: evaluation, identity sweeps, Monte Carlo checks.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on malformed input or usage errors.  Reports are JSON (canonical form:
sorted keys, two-space indent) or CSV with the same columns; exact values
are serialized as fraction strings so zero-residual results survive the
trip to disk.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .identities import (
    IdentityReport,
    Matrix,
    Vector,
    graczyk_identity,
    matrix_polarization,
    polarization_pair,
)
from .ghpoly import gh_eval, hermite_eval
from .sampling import (
    DEFAULT_ORDER,
    DEFAULT_Z,
    RngStream,
    SampleStats,
    chi_even_moment,
    chi_merge_samples,
    collect_stats,
    inner_product_lhs_samples,
    inner_product_rhs_samples,
    ks_two_sample,
    matrix_trace_rhs_samples,
    matrix_trace_samples,
    moment_match,
    moment_match_exact,
    sample_chi,
)
from .scalars import (
    EXACT,
    FLOAT,
    exact,
    format_scalar,
    parse_scalar,
    to_float,
)
from .sweeps import P_GRID, SWEEPS, grid_description

SPEC_VERSION = __version__

VERIFY_IDENTITIES = (
    "graczyk",
    "rotation",
    "factorization",
    "inner-product-moments",
    "matrix",
)
SAMPLE_TARGETS = ("inner-product", "matrix", "chi-merge")

THREADS_ENV = "GH_KERNEL_THREADS"


@dataclass(frozen=True)
class RunConfig:
    """Resolved options for one command invocation.

    Exact mode ignores tolerances entirely; float mode demands a positive
    one.  Monte Carlo commands derive their per-moment tolerances from z
    instead and leave `tolerance` unset.
    """

    command: str
    mode: str = EXACT
    tolerance: float | None = None
    seed: int = 0
    count: int = 1_000_000
    order: int = DEFAULT_ORDER
    z: float = DEFAULT_Z
    out: str | None = None
    fmt: str = "json"

    def __post_init__(self) -> None:
        if self.mode == EXACT and self.tolerance is not None:
            raise ValueError("exact mode has no tolerance")
        if self.tolerance is not None and self.tolerance <= 0:
            raise ValueError("float mode needs a positive tolerance")


def canonical_json(obj: object) -> str:
    """Canonical serialization; loads + dumps reproduces identical bytes."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_vector(text: str, mode: str) -> Vector:
    parts = [chunk for chunk in text.split(",") if chunk.strip()]
    if not parts:
        raise ValueError(f"empty vector {text!r}")
    return tuple(parse_scalar(chunk, mode) for chunk in parts)


def _parse_matrix(text: str, mode: str) -> Matrix:
    rows = [row for row in text.split(";") if row.strip()]
    if not rows:
        raise ValueError(f"empty matrix {text!r}")
    matrix = tuple(_parse_vector(row, mode) for row in rows)
    if any(len(row) != len(matrix[0]) for row in matrix):
        raise ValueError("matrix rows differ in length")
    return matrix


def _parse_real(text: str, mode: str = FLOAT) -> float:
    value = parse_scalar(text, mode)
    if not value.is_real():
        raise ValueError(f"expected a real number, got {text!r}")
    return float(value.re)


def _threads_from_env() -> int | None:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be >= 1")
    return value


def _report_row(report: IdentityReport) -> dict[str, object]:
    return {
        "identity": report.identity,
        "mode": report.mode,
        "params": report.params,
        "lhs": format_scalar(report.lhs),
        "rhs": format_scalar(report.rhs),
        "residual": format_scalar(report.residual),
        "verdict": report.verdict,
        "spec_version": SPEC_VERSION,
    }


CSV_COLUMNS = (
    "identity",
    "mode",
    "params",
    "lhs",
    "rhs",
    "residual",
    "verdict",
    "spec_version",
)


def _rows_to_csv(rows: Sequence[dict[str, object]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        flat = dict(row)
        flat["params"] = json.dumps(row["params"], sort_keys=True)
        writer.writerow(flat)
    return buffer.getvalue()


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


# ---------------------------------------------------------------------------
# eval


def _cmd_eval(args: argparse.Namespace) -> int:
    mode = args.mode
    x = parse_scalar(args.x, mode)
    if args.hermite:
        if args.n is None:
            raise ValueError("--hermite needs --n")
        result = hermite_eval(args.n, x)
    else:
        if args.m is None or args.p is None:
            raise ValueError("eval needs --m and --p (or --hermite with --n)")
        p = parse_scalar(args.p, mode)
        result = gh_eval(args.m, x, p)
    print(format_scalar(result))
    return 0


# ---------------------------------------------------------------------------
# verify


def _graczyk_point_reports(
    args: argparse.Namespace, config: RunConfig
) -> list[IdentityReport]:
    xv = _parse_vector(args.xv, config.mode)
    yv = _parse_vector(args.yv, config.mode)
    if args.p is not None:
        p_values = [parse_scalar(args.p, config.mode)]
    else:
        p_values = [
            to_float(exact(p)) if config.mode == FLOAT else exact(p)
            for p in P_GRID
        ]
    reports = []
    for big_m in range(7):
        for p in p_values:
            reports.append(graczyk_identity(big_m, xv, yv, p, config.tolerance))
    return reports


def _verify_config(args: argparse.Namespace) -> RunConfig:
    tolerance: float | None = None
    if args.mode == FLOAT:
        tolerance = args.tolerance if args.tolerance is not None else 1e-9
    return RunConfig(
        command="verify",
        mode=args.mode,
        tolerance=tolerance,
        out=args.out,
        fmt=args.format,
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _verify_config(args)
    max_workers = _threads_from_env()

    explicit_point = args.xv is not None or args.yv is not None
    if explicit_point:
        if args.identity != "graczyk":
            raise ValueError("--xv/--yv overrides apply to the graczyk identity only")
        if args.xv is None or args.yv is None:
            raise ValueError("need both --xv and --yv")
        reports = _graczyk_point_reports(args, config)
        grid: dict[str, object] = {
            "explicit_point": {"xv": args.xv, "yv": args.yv, "p": args.p or "default grid"}
        }
    else:
        reports = SWEEPS[args.identity](
            mode=config.mode, tolerance=config.tolerance, max_workers=max_workers
        )
        grid = grid_description(args.identity)

    rows = [_report_row(r) for r in reports]
    all_pass = all(r.passed for r in reports)
    if config.fmt == "csv":
        text = _rows_to_csv(rows)
    else:
        envelope = {
            "all_pass": all_pass,
            "command": "verify",
            "grid": grid,
            "identity": args.identity,
            "mode": config.mode,
            "report_count": len(rows),
            "reports": rows,
            "spec_version": SPEC_VERSION,
            "tolerance": config.tolerance,
        }
        text = canonical_json(envelope)
    _emit(text, config.out)
    summary = f"verify {args.identity}: {len(rows)} checks, "
    summary += "all pass" if all_pass else "FAILURES present"
    print(summary, file=sys.stderr)
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------
# sample


def _stats_row(stats: SampleStats) -> dict[str, object]:
    return {
        "count": stats.count,
        "moments": list(stats.moments),
        "std_errors": list(stats.std_errors),
    }


def _verdict_rows(verdicts) -> list[dict[str, object]]:
    return [
        {
            "order": v.order,
            "lhs": v.lhs,
            "rhs": v.rhs,
            "difference": v.difference,
            "tolerance": v.tolerance,
            "verdict": "pass" if v.passed else "fail",
        }
        for v in verdicts
    ]


def _sample_payload(args: argparse.Namespace) -> tuple[dict[str, object], bool]:
    config = RunConfig(
        command="sample",
        mode=FLOAT,
        seed=args.seed,
        count=args.count,
        order=args.order,
        z=args.z,
        out=args.out,
        fmt=args.format,
    )
    seed, count, order, z = config.seed, config.count, config.order, config.z
    if count < 2:
        raise ValueError("--count must be at least 2")
    if order < 1:
        raise ValueError("--order must be at least 1")
    lhs_stream = RngStream(seed, 0)
    rhs_stream = RngStream(seed, 1)
    params: dict[str, object] = {
        "seed": seed,
        "count": count,
        "order": order,
        "z": z,
        "stream_layout": {"lhs": 0, "rhs": 1},
    }
    extra: dict[str, object] = {}

    if args.target == "inner-product":
        xv = _parse_vector(args.xv, FLOAT)
        yv = _parse_vector(args.yv, FLOAT)
        p = _parse_real(args.p)
        if p < 0:
            raise ValueError("sampling needs p >= 0")
        pair = polarization_pair(xv, yv)
        lhs = inner_product_lhs_samples(
            [float(s.re) for s in xv], [float(s.re) for s in yv], p, lhs_stream, count
        )
        rhs = inner_product_rhs_samples(pair, len(xv), p, rhs_stream, count)
        params.update(
            {
                "xv": args.xv,
                "yv": args.yv,
                "p": p,
                "p_convention": "sqrt(p)",
                "pair_x": float(pair.x.re),
                "pair_y": float(pair.y.re),
            }
        )
    elif args.target == "matrix":
        xm = _parse_matrix(args.xm, FLOAT)
        ym = _parse_matrix(args.ym, FLOAT)
        pair = matrix_polarization(xm, ym)
        rows, cols = len(xm), len(xm[0])
        lhs = matrix_trace_samples(
            [[float(s.re) for s in row] for row in xm],
            [[float(s.re) for s in row] for row in ym],
            lhs_stream,
            count,
        )
        rhs = matrix_trace_rhs_samples(pair, rows * cols, rhs_stream, count)
        params.update(
            {
                "xm": args.xm,
                "ym": args.ym,
                "shape": f"{rows}x{cols}",
                "p_convention": "unit-variance noise",
                "pair_x": float(pair.x.re),
                "pair_y": float(pair.y.re),
            }
        )
    else:  # chi-merge
        a, b = args.a, args.b
        if a < 1 or b < 1:
            raise ValueError("chi-merge needs --a >= 1 and --b >= 1")
        lhs = chi_merge_samples(lhs_stream, a, b, count)
        rhs = sample_chi(rhs_stream, a + b, count)
        params.update({"a": a, "b": b})
        exact_targets = {
            2: float(chi_even_moment(a + b, 1)),
            4: float(chi_even_moment(a + b, 2)),
        }
        extra["exact_moments"] = {str(k): v for k, v in exact_targets.items()}

    lhs_stats = collect_stats(lhs, order)
    rhs_stats = collect_stats(rhs, order)
    verdicts = moment_match(lhs_stats, rhs_stats, order, z)
    all_pass = all(v.passed for v in verdicts)

    if args.target == "chi-merge":
        exact_orders = {k: v for k, v in exact_targets.items() if k <= order}
        exact_verdicts = moment_match_exact(lhs_stats, exact_orders, z)
        extra["exact_verdicts"] = _verdict_rows(exact_verdicts)
        all_pass = all_pass and all(v.passed for v in exact_verdicts)

    if args.ks:
        statistic, pvalue = ks_two_sample(lhs, rhs)
        extra["ks"] = {"statistic": statistic, "pvalue": pvalue}

    payload: dict[str, object] = {
        "all_pass": all_pass,
        "command": "sample",
        "lhs_stats": _stats_row(lhs_stats),
        "moments": _verdict_rows(verdicts),
        "params": params,
        "rhs_stats": _stats_row(rhs_stats),
        "spec_version": SPEC_VERSION,
        "target": args.target,
    }
    payload.update(extra)
    return payload, all_pass


def _sample_csv(payload: dict[str, object]) -> str:
    rows = []
    for entry in payload["moments"]:  # type: ignore[index]
        rows.append(
            {
                "identity": payload["target"],
                "mode": FLOAT,
                "params": {"order": entry["order"], **payload["params"]},  # type: ignore[dict-item]
                "lhs": repr(entry["lhs"]),
                "rhs": repr(entry["rhs"]),
                "residual": repr(entry["difference"]),
                "verdict": entry["verdict"],
                "spec_version": SPEC_VERSION,
            }
        )
    return _rows_to_csv(rows)


def _cmd_sample(args: argparse.Namespace) -> int:
    payload, all_pass = _sample_payload(args)
    if args.format == "csv":
        text = _sample_csv(payload)
    else:
        text = canonical_json(payload)
    _emit(text, args.out)
    summary = f"sample {args.target}: "
    summary += "all moments match" if all_pass else "MOMENT MISMATCH"
    print(summary, file=sys.stderr)
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghkernel",
        description="Evaluate Gould-Hopper polynomials and verify their sum rules.",
    )
    parser.add_argument("--version", action="version", version=f"ghkernel {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a polynomial at a point")
    p_eval.add_argument("--m", type=int, help="polynomial degree")
    p_eval.add_argument("--x", required=True, help="evaluation point (a/b or a/b+c/di)")
    p_eval.add_argument("--p", help="polynomial parameter")
    p_eval.add_argument("--hermite", action="store_true", help="evaluate H_n instead")
    p_eval.add_argument("--n", type=int, help="Hermite degree (with --hermite)")
    p_eval.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run an identity sweep")
    p_verify.add_argument("identity", choices=VERIFY_IDENTITIES)
    p_verify.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    p_verify.add_argument(
        "--tolerance", type=float, help="relative tolerance (float mode only)"
    )
    p_verify.add_argument("--xv", help="explicit first vector (graczyk only)")
    p_verify.add_argument("--yv", help="explicit second vector (graczyk only)")
    p_verify.add_argument("--p", help="explicit parameter (with --xv/--yv)")
    p_verify.add_argument("--out", help="report path (default: stdout)")
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.set_defaults(func=_cmd_verify)

    p_sample = sub.add_parser("sample", help="run a seeded Monte Carlo check")
    p_sample.add_argument("target", choices=SAMPLE_TARGETS)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--count", type=int, default=1_000_000)
    p_sample.add_argument("--order", type=int, default=DEFAULT_ORDER,
                          help="highest moment order to match")
    p_sample.add_argument("--z", type=float, default=DEFAULT_Z,
                          help="pass threshold in combined standard errors")
    p_sample.add_argument("--xv", default="3,4", help="first vector (inner-product)")
    p_sample.add_argument("--yv", default="3,4", help="second vector (inner-product)")
    p_sample.add_argument("--p", default="1", help="noise scale p >= 0 (inner-product)")
    p_sample.add_argument("--xm", default="3,0;0,0", help="first matrix (matrix)")
    p_sample.add_argument("--ym", default="0,4;0,0", help="second matrix (matrix)")
    p_sample.add_argument("--a", type=int, default=3, help="first dof (chi-merge)")
    p_sample.add_argument("--b", type=int, default=4, help="second dof (chi-merge)")
    p_sample.add_argument("--ks", action="store_true",
                          help="include the Kolmogorov-Smirnov diagnostic")
    p_sample.add_argument("--out", help="report path (default: stdout)")
    p_sample.add_argument("--format", choices=("json", "csv"), default="json")
    p_sample.set_defaults(func=_cmd_sample)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except Exception as exc:  # malformed input must never crash the tool
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
