"""Command-line front end: practicality tests, count sieves, order dumps, scanners.

Exit status is 0 on success, 2 on usage errors (argparse), and 1 when a run
fails on a capacity or value error.  All output is UTF-8 with LF line
endings; identical flags produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import (
    AnalysisConfig,
    a_q_primes,
    count_z_dense,
    dense_count_bound_ratio,
    lambda_order_ratio_stats,
    omega_phi_distribution,
    omega_phi_threshold,
    order_check,
    small_order_count,
    smooth_lambda_part_count,
    tau_bound_ratio,
    tau_threshold_count,
)
from .arith import build_spf_table, is_prime
from .counting import (
    count_p_practical_partitioned,
    count_phi_practical,
    render_csv,
    render_json,
    render_text,
)
from .errors import CapacityError
from .orders import sieve_order_star
from .practicality import (
    degree_multiset,
    dp_reachable_mask,
    is_p_practical,
    is_phi_practical,
    phi_degree_multiset,
)

STAT_SCANNERS = (
    "zdense",
    "aq",
    "ratios",
    "smallorder",
    "omegaphi",
    "tau",
    "smoothlambda",
)


def _parse_count_arg(text: str) -> int:
    """Integer flag value, accepting 1e6-style shorthand."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value != int(value):
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _parse_positive(text: str) -> int:
    value = _parse_count_arg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _parse_prime(text: str) -> int:
    value = _parse_count_arg(text)
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"not a prime: {text!r}")
    return value


def _parse_checkpoints(text: str) -> list[int]:
    try:
        return [_parse_count_arg(part) for part in text.split(",") if part]
    except argparse.ArgumentTypeError as exc:
        raise argparse.ArgumentTypeError(f"bad checkpoint list {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclopract",
        description="Practicality tests and count tables for divisor degrees of x^n - 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="decide practicality of a single n")
    p_test.add_argument("n", type=_parse_positive)
    kind = p_test.add_mutually_exclusive_group(required=True)
    kind.add_argument("--prime", type=_parse_prime, help="test p-practicality for this prime")
    kind.add_argument("--phi", action="store_true", help="test phi-practicality")
    p_test.add_argument(
        "--witness",
        action="store_true",
        help="verify a reported witness gap against the subset-sum oracle",
    )
    p_test.set_defaults(func=_cmd_test)

    p_count = sub.add_parser("count", help="checkpointed counts up to a limit")
    kind = p_count.add_mutually_exclusive_group(required=True)
    kind.add_argument("--prime", type=_parse_prime)
    kind.add_argument("--phi", action="store_true")
    p_count.add_argument("--limit", type=_parse_positive, required=True)
    p_count.add_argument("--checkpoints", type=_parse_checkpoints, default=None)
    p_count.add_argument("--parts", type=_parse_positive, default=os.cpu_count() or 1)
    p_count.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p_count.add_argument("--out", default=None)
    p_count.set_defaults(func=_cmd_count)

    p_orders = sub.add_parser("orders", help="dump an order-star table as CSV")
    p_orders.add_argument("--base", type=_parse_positive, required=True)
    p_orders.add_argument("--limit", type=_parse_positive, required=True)
    p_orders.add_argument("--out", default=None)
    p_orders.set_defaults(func=_cmd_orders)

    p_stats = sub.add_parser("stats", help="empirical scanners over n <= limit")
    p_stats.add_argument("scanner", choices=STAT_SCANNERS)
    p_stats.add_argument("--limit", type=_parse_positive, required=True)
    p_stats.add_argument("--z", type=float, default=None)
    p_stats.add_argument("--q", type=_parse_prime, default=None)
    p_stats.add_argument("--base", type=_parse_positive, default=None)
    p_stats.add_argument("--bound", type=float, default=None)
    p_stats.add_argument("--kappa", type=float, default=None)
    p_stats.add_argument("--theta", type=float, default=None)
    p_stats.add_argument("--B", type=float, default=None)
    p_stats.add_argument("--Y", type=float, default=None)
    p_stats.add_argument("--psi", type=float, default=None)
    p_stats.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p_stats.add_argument("--out", default=None)
    p_stats.set_defaults(func=_cmd_stats)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_test(args) -> int:
    if args.phi:
        verdict = is_phi_practical(args.n)
        head = f"n={args.n} kind=phi"
    else:
        verdict = is_p_practical(args.n, args.prime)
        head = f"n={args.n} kind=p base={args.prime}"
    line = f"{head} practical={'yes' if verdict.practical else 'no'}"
    if not verdict.practical:
        line += f" witness_gap={verdict.witness_gap}"
        if args.witness:
            ms = phi_degree_multiset(args.n) if args.phi else degree_multiset(args.n, args.prime)
            mask = dp_reachable_mask(ms)
            gap = verdict.witness_gap
            sound = not (mask >> gap) & 1 and (mask >> (gap - 1)) & 1
            line += f" witness_verified={'yes' if sound else 'NO'}"
            if not sound:
                print(line)
                return 1
    print(line)
    return 0


def _cmd_count(args) -> int:
    if args.phi:
        report = count_phi_practical(args.limit, args.checkpoints, parts=args.parts)
    else:
        report = count_p_practical_partitioned(
            args.prime, args.limit, args.checkpoints, parts=args.parts
        )
    renderer = {"csv": render_csv, "json": render_json, "text": render_text}[args.format]
    _emit(renderer(report), args.out)
    return 0


def _cmd_orders(args) -> int:
    spf = build_spf_table(max(args.limit, 2))
    table = sieve_order_star(args.base, args.limit, spf)
    values = table.values
    if args.out is None:
        fh = sys.stdout
        close = False
    else:
        fh = open(args.out, "w", encoding="utf-8", newline="\n")
        close = True
    try:
        fh.write("d,order_star\n")
        for d in range(1, args.limit + 1):
            fh.write(f"{d},{values[d]}\n")
    finally:
        if close:
            fh.close()
    return 0


def _require(args, parser_hint: str, **needed):
    missing = [flag for flag, value in needed.items() if value is None]
    if missing:
        flags = ", ".join(f"--{m}" for m in missing)
        raise ValueError(f"scanner {parser_hint!r} requires {flags}")


def _stats_payload(args) -> tuple[dict, list[tuple[str, object, object]]]:
    """Run the chosen scanner; return (summary dict, CSV rows)."""
    limit = args.limit
    config = None
    if args.theta is not None:
        config = AnalysisConfig.from_theta(args.theta, limit, Z=args.z, psi=args.psi)

    scanner = args.scanner
    rows: list[tuple[str, object, object]] = []
    result: dict = {}

    if scanner == "zdense":
        z = args.z if args.z is not None else (config.Z if config else None)
        _require(args, scanner, z=z)
        count = count_z_dense(limit, z)
        ratio = dense_count_bound_ratio(limit, z, count)
        result = {"Z": z, "count": count, "bound_ratio": ratio}
        rows = [
            ("zdense_count", limit, count),
            ("zdense_bound_ratio", limit, f"{ratio:.6f}"),
        ]
    elif scanner == "aq":
        _require(args, scanner, base=args.base, q=args.q)
        primes = a_q_primes(args.base, args.q, limit)
        result = {"base": args.base, "q": args.q, "primes": primes}
        rows = [("aq_prime", p, order_check(args.base, p)) for p in primes]
    elif scanner == "ratios":
        _require(args, scanner, base=args.base)
        spf = build_spf_table(max(limit, 2))
        orders = sieve_order_star(args.base, limit, spf)
        psi = args.psi if args.psi is not None else (config.psi if config else None)
        stats = lambda_order_ratio_stats(args.base, limit, spf, orders, psi=psi)
        counts = dict(sorted(stats.counts.items()))
        result = {"base": args.base, "counts": counts, "exceed_psi": stats.exceed_psi}
        rows = [("ratio_largest_prime", k, v) for k, v in counts.items()]
        if psi is not None:
            rows.append(("ratio_exceed_psi", limit, stats.exceed_psi))
    elif scanner == "smallorder":
        _require(args, scanner, base=args.base)
        bound = args.bound
        if bound is None and config is not None:
            bound = config.small_order_bound()
        _require(args, scanner, bound=bound)
        spf = build_spf_table(max(limit, 2))
        orders = sieve_order_star(args.base, limit, spf)
        count = small_order_count(args.base, limit, bound, orders)
        result = {"base": args.base, "bound": bound, "count": count}
        rows = [
            ("small_order_bound", limit, repr(bound)),
            ("small_order_count", limit, count),
        ]
    elif scanner == "omegaphi":
        dist = omega_phi_distribution(limit)
        cutoff = omega_phi_threshold(limit)
        excess = sum(c for om, c in dist.items() if om >= cutoff)
        result = {"threshold": cutoff, "excess": excess, "distribution": dict(sorted(dist.items()))}
        rows = [("omega_phi", k, v) for k, v in sorted(dist.items())]
        rows.append(("omega_phi_threshold", limit, repr(cutoff)))
        rows.append(("omega_phi_excess", limit, excess))
    elif scanner == "tau":
        _require(args, scanner, kappa=args.kappa)
        count = tau_threshold_count(limit, args.kappa)
        ratio = tau_bound_ratio(limit, args.kappa, count)
        result = {"kappa": args.kappa, "count": count, "bound_ratio": ratio}
        rows = [
            ("tau_count", limit, count),
            ("tau_bound_ratio", limit, f"{ratio:.6f}"),
        ]
    elif scanner == "smoothlambda":
        smooth_bound = args.B if args.B is not None else (config.B if config else None)
        threshold = args.Y if args.Y is not None else (config.Y if config else None)
        _require(args, scanner, B=smooth_bound, Y=threshold)
        count = smooth_lambda_part_count(limit, int(smooth_bound), threshold)
        result = {"B": smooth_bound, "Y": threshold, "count": count}
        rows = [("smooth_lambda_count", limit, count)]
    else:  # pragma: no cover - argparse choices guard this
        raise ValueError(f"unknown scanner {scanner!r}")

    echo = {
        "theta": config.theta if config else args.theta,
        "X": limit,
        "Y": config.Y if config else args.Y,
        "B": config.B if config else args.B,
        "Z": config.Z if config else args.z,
        "kappa": args.kappa,
        "psi": config.psi if config else args.psi,
    }
    summary = {"scanner": scanner, "limit": limit, "config": echo, "result": result}
    return summary, rows


def _cmd_stats(args) -> int:
    summary, rows = _stats_payload(args)
    if args.format == "json":
        _emit(json.dumps(summary, indent=2) + "\n", args.out)
    elif args.format == "csv":
        lines = ["stat,n_or_prime,value"]
        lines.extend(f"{stat},{mid},{value}" for stat, mid, value in rows)
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"{stat} {mid} = {value}" for stat, mid, value in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
