"""Command-line interface.

Subcommands: dist, growth, tables, sample, check, oracle.  Exit codes:
0 success, 1 a requested check failed, 2 usage or validation error.  The
environment variable HYPERCUT_OUTDIR, when set, prefixes relative output
paths.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import asymptotics, exact_distribution, oracle
from .core import (DEFAULT_ENUM_CAP, CapExceeded, check_block_diagonalizable,
                   cutsize, hypergraph_from_matrix, is_balanced,
                   matrix_from_hypergraph, max_parallel_degree,
                   min_cutsize_bruteforce)
from .ensemble import RNG_ALGORITHM, sample, validate
from .formats import alist_text, read_alist, read_partition, write_alist


def _outpath(arg: str | None) -> Path | None:
    if arg is None:
        return None
    path = Path(arg)
    outdir = os.environ.get("HYPERCUT_OUTDIR")
    if outdir and not path.is_absolute():
        path = Path(outdir) / path
    return path


def _eps(arg: str | None) -> Fraction | None:
    if arg is None:
        return None
    eps = Fraction(arg)
    if eps < 0:
        raise ValueError("epsilon must be non-negative")
    return eps


def cmd_dist(args) -> int:
    params = validate(args.n, args.gamma, args.delta)
    table = exact_distribution.cutsize_table(params)
    print(f"ensemble: n={params.n} gamma={params.gamma} delta={params.delta} "
          f"m={params.m} xi={params.xi}")

    total = table.total()
    ok = total == 2 ** params.m
    print(f"sum identity: total = {total} vs 2^m = {2 ** params.m} "
          f"{'PASS' if ok else 'FAIL'}")
    status = 0 if ok else 1

    out = _outpath(args.out)
    if out is not None:
        rows = exact_distribution.write_table_csv(table, out,
                                                  args.suppress_zeros)
        print(f"wrote {rows} rows to {out}")
    else:
        print("s,m1,A_num,A_den")
        for s in range(params.n + 1):
            for m1 in range(params.m + 1):
                val = table.value(s, m1)
                if args.suppress_zeros and val == 0:
                    continue
                print(f"{s},{m1},{val.numerator},{val.denominator}")

    eps = _eps(args.epsilon)
    if eps is not None:
        lo, hi = exact_distribution.balanced_first_part_range(params.m, eps)
        if lo > hi:
            print(f"note: no exactly balanced bipartition exists "
                  f"(m = {params.m}, epsilon = {eps}); B is identically zero")
        bout = _outpath(args.b_out)
        if bout is not None:
            rows = exact_distribution.write_balanced_csv(table, eps, bout,
                                                         args.suppress_zeros)
            print(f"wrote {rows} balanced rows to {bout}")
        else:
            dist = table.balanced_distribution(eps)
            print("s,B_num,B_den")
            for s in range(params.n + 1):
                val = dist[s]
                if args.suppress_zeros and val == 0:
                    continue
                print(f"{s},{val.numerator},{val.denominator}")

    if args.check_oracle:
        avg = oracle.exact_ensemble_average(params, cap=args.cap)
        match = all(avg.value(s, m1) == table.value(s, m1)
                    for s in range(params.n + 1)
                    for m1 in range(params.m + 1))
        print(f"oracle equality: {'EXACT MATCH PASS' if match else 'MISMATCH FAIL'}")
        if not match:
            status = 1
    return status


def cmd_growth(args) -> int:
    if args.step <= 0:
        raise ValueError("grid step must be positive")
    points = round(1.0 / args.step)
    grid = [i / points for i in range(points + 1)]
    pts = asymptotics.curve((args.gamma, args.delta), args.epsilon, grid)
    out = _outpath(args.out)
    if out is not None:
        asymptotics.write_curve_csv(pts, out)
        print(f"wrote {len(pts)} points to {out}")
    else:
        print("sigma,h")
        for p in pts:
            print(f"{p.sigma:.10g},{p.value:.10g}")
    return 0


def cmd_tables(args) -> int:
    gammas = [int(x) for x in args.gamma.split(",")]
    deltas = [int(x) for x in args.delta.split(",")]
    rows = []
    for g in gammas:
        for d in deltas:
            rows.append(asymptotics.verdict((g, d), args.epsilon,
                                            tol=args.tol))
    print("gamma delta design_rate beta_star satisfied margin")
    for r in rows:
        print(f"{r.gamma:5d} {r.delta:5d} {r.design_rate:11.4f} "
              f"{r.beta_star:9.4f} {'yes' if r.satisfied else 'no':>9} "
              f"{r.margin:+8.4f}")
    out = _outpath(args.out)
    if out is not None:
        asymptotics.write_verdict_csv(rows, out)
        print(f"wrote {len(rows)} rows to {out}")
    return 0


def cmd_sample(args) -> int:
    params = validate(args.n, args.gamma, args.delta)
    h = sample(params, args.seed)
    mat = matrix_from_hypergraph(h)
    out = _outpath(args.out)
    if out is not None:
        write_alist(mat, out)
        print(f"wrote {mat.rows} x {mat.cols} instance to {out}")
        print(f"rng: {RNG_ALGORITHM}, seed: {args.seed}")
    else:
        print(f"rng: {RNG_ALGORITHM}, seed: {args.seed}", file=sys.stderr)
        sys.stdout.write(alist_text(mat))
    return 0


def cmd_check(args) -> int:
    mat = read_alist(args.alist)
    part = read_partition(args.partition, args.parts)
    if part.size != mat.rows:
        raise ValueError(f"partition covers {part.size} vertices but the "
                         f"matrix has {mat.rows} rows")
    eps = _eps(args.epsilon)
    n, m = mat.cols, mat.rows

    print(f"matrix: {m} rows x {n} cols, partition: K={part.k}, "
          f"sizes {part.part_sizes()}")
    print(f"balanced (eps={eps}): {'yes' if is_balanced(part, eps) else 'no'}")
    h = hypergraph_from_matrix(mat)
    cut = cutsize(h, part)
    print(f"cutsize: {cut}")
    v = check_block_diagonalizable(mat, part, eps)
    print("per-part (size, exclusive-column rank): "
          + ", ".join(f"({s}, {r})" for s, r in v.per_part_rank))
    print(f"block-diagonal encodable with this partition: "
          f"{'yes' if v.feasible else 'no'}")
    if v.feasible and n - m < cut:
        print("consistency violated: feasible but n - m < cutsize")
        return 1

    try:
        mincut, _ = min_cutsize_bruteforce(h, part.k, eps, cap=args.cap)
        print(f"min cutsize over eps-balanced {part.k}-way partitions: {mincut}")
        cond = n - m >= mincut
        print(f"necessary condition n - m >= min cutsize: "
              f"{n} - {m} = {n - m} vs {mincut} -> "
              f"{'SATISFIED' if cond else 'NOT SATISFIED'}")
        kmax = max_parallel_degree(mat, eps, cap=args.cap)
        print(f"max parallel degree: {kmax}")
    except CapExceeded as exc:
        print(f"brute force skipped: {exc}")
    return 0


def cmd_oracle(args) -> int:
    params = validate(args.n, args.gamma, args.delta)
    table = exact_distribution.cutsize_table(params)
    out = _outpath(args.out)

    if args.mode == "exhaustive":
        avg = oracle.exact_ensemble_average(params, cap=args.cap)
        print("s,m1,A_num,A_den")
        for s in range(params.n + 1):
            for m1 in range(params.m + 1):
                val = avg.value(s, m1)
                if val != 0:
                    print(f"{s},{m1},{val.numerator},{val.denominator}")
        if out is not None:
            exact_distribution.write_table_csv(avg, out)
            print(f"wrote table to {out}")
        match = avg.cells == table.cells
        print("EXACT MATCH" if match else "MISMATCH")
        return 0 if match else 1

    est = oracle.monte_carlo_average(params, args.samples, args.seed,
                                     cap=args.cap)
    bad = 0
    for s in range(params.n + 1):
        for m1 in range(params.m + 1):
            diff = abs(est.mean[s, m1] - float(table.value(s, m1)))
            se = est.stderr[s, m1]
            if (se == 0 and diff != 0) or (se > 0 and diff > 4 * se):
                bad += 1
    cells = (params.n + 1) * (params.m + 1)
    print(f"samples: {args.samples}, seed: {args.seed}, rng: {RNG_ALGORITHM}")
    print(f"cells beyond 4 standard errors: {bad}/{cells}")
    if out is not None:
        oracle.write_estimate_csv(est, out)
        print(f"wrote estimate to {out}")
    return 0 if bad <= 1 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercut",
        description="Cutsize distributions, growth rates and block-diagonal "
                    "encodability checks for regular hypergraph ensembles.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                        help="enumeration budget (assignments/permutations)")
    common.add_argument("--seed", type=int, default=0, help="RNG seed")
    common.add_argument("--tol", type=float, default=1e-10,
                        help="root isolation tolerance")

    p = sub.add_parser("dist", parents=[common],
                       help="exact cutsize distribution table")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-g", "--gamma", type=int, required=True)
    p.add_argument("-d", "--delta", type=int, required=True)
    p.add_argument("-e", "--epsilon", help="imbalance ratio for the balanced "
                   "column (exact; e.g. 0, 0.1, 1/3)")
    p.add_argument("-o", "--out", help="A-table CSV path")
    p.add_argument("--b-out", help="balanced-table CSV path")
    p.add_argument("--check-oracle", action="store_true",
                   help="verify against the exhaustive permutation average")
    p.add_argument("--suppress-zeros", action="store_true")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("growth", parents=[common],
                       help="balanced growth-rate curve")
    p.add_argument("-g", "--gamma", type=int, required=True)
    p.add_argument("-d", "--delta", type=int, required=True)
    p.add_argument("-e", "--epsilon", type=float, default=0.0)
    p.add_argument("--step", type=float, default=1e-3, help="sigma grid step")
    p.add_argument("-o", "--out", help="curve CSV path")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("tables", parents=[common],
                       help="design rate vs typical minimum cutsize")
    p.add_argument("-g", "--gamma", required=True,
                   help="comma-separated gamma values")
    p.add_argument("-d", "--delta", required=True,
                   help="comma-separated delta values")
    p.add_argument("-e", "--epsilon", type=float, default=0.0)
    p.add_argument("-o", "--out", help="verdict CSV path")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("sample", parents=[common],
                       help="sample one instance to alist")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-g", "--gamma", type=int, required=True)
    p.add_argument("-d", "--delta", type=int, required=True)
    p.add_argument("-o", "--out", help="alist output path")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("check", parents=[common],
                       help="check a partitioned instance")
    p.add_argument("--alist", required=True, help="alist matrix file")
    p.add_argument("--partition", required=True, help="partition label file")
    p.add_argument("-e", "--epsilon", default="0")
    p.add_argument("-K", "--parts", type=int,
                   help="expected part count (default: max label)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force validation of the distribution")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-g", "--gamma", type=int, required=True)
    p.add_argument("-d", "--delta", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "montecarlo"),
                   default="exhaustive")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("-o", "--out", help="CSV output path")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
