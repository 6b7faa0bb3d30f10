"""Command-line interface.

Every subcommand echoes its parameters on the first output line and ends with
machine-parseable `RESULT <key>=<value>` lines.  Exit codes: 0 success (for
`check`: rainbow-free), 1 rainbow found, 2 configuration/parse error,
3 resource limit or incomplete result, 4 property violation found.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import comb

from . import __version__
from .errors import (
    ContractViolationError,
    FormatError,
    InvalidParameterError,
    ResourceLimitError,
)
from .io import load_system, load_weighted, print_system, print_weighted, save_weighted
from .model import PatternGraph, turan_graph, turan_number
from .nesting import nest, to_weighted
from .rainbow import find_rainbow
from .sampling import claim_sweep
from .search import (
    bnb_optimum,
    brute_force_optimum,
    kernel_backend,
    verify_conjecture_grid,
)
from .sequences import greedy_packing

EXIT_OK = 0
EXIT_RAINBOW = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3
EXIT_VIOLATION = 4


def _threads(args) -> int:
    env = os.environ.get("RBLAB_THREADS")
    if env is not None:
        return max(1, int(env))
    return max(1, args.threads)


def _echo(cmd: str, **params) -> None:
    body = " ".join(f"{k}={v}" for k, v in params.items())
    print(f"params: cmd={cmd} {body}".rstrip())


def _result(**kv) -> None:
    for key, value in kv.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        print(f"RESULT {key}={value}")


def cmd_turan(args) -> int:
    _echo("turan", n=args.n, parts=args.parts)
    t = turan_number(args.n, args.parts)
    g = turan_graph(args.n, args.parts)
    print(f"t={t}")
    print("graph: " + " ".join(f"{u}-{v}" for u, v in g.sorted_edges()))
    _result(t=t)
    return EXIT_OK


def cmd_check(args) -> int:
    system = load_system(args.file)
    _echo("check", file=args.file, r=args.r, n=system.n, k=system.k)
    cert = find_rainbow(system, PatternGraph.clique(args.r))
    if cert is None:
        print("rainbow-free")
        _result(rainbow_free=True)
        return EXIT_OK
    pattern = PatternGraph.clique(args.r)
    print("rainbow found: vertices " + " ".join(str(v) for v in cert.vertex_map))
    for (u, v), member in zip(cert.mapped_edges(pattern), cert.assignment):
        print(f"edge {u}-{v} -> member {member}")
    _result(rainbow_free=False)
    return EXIT_RAINBOW


def cmd_nest(args) -> int:
    system = load_system(args.file)
    _echo("nest", file=args.file, n=system.n, k=system.k)
    nested = nest(system)
    text = print_system(nested)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    _result(total_size=nested.total_size())
    return EXIT_OK


def cmd_to_weighted(args) -> int:
    system = load_system(args.file)
    _echo("to-weighted", file=args.file, n=system.n, k=system.k)
    wg = to_weighted(system)
    text = print_weighted(wg)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    _result(total_weight=wg.total_weight())
    return EXIT_OK


def cmd_pack(args) -> int:
    wg = load_weighted(args.file)
    _echo("pack", file=args.file, r=args.r, n=wg.n, k=wg.k)
    packing = greedy_packing(wg, args.r)
    for s in range(args.r - 1, 1, -1):
        members = " | ".join(",".join(map(str, m)) for m in packing.levels.get(s, ()))
        print(f"level {s}: {members}")
    print("leftover: " + ",".join(map(str, packing.leftover)))
    _result(**{f"m{s}": packing.m(s) for s in range(args.r - 1, 0, -1)})
    return EXIT_OK


def cmd_verify_bounds(args) -> int:
    from .bounds import verify_prop31

    _echo("verify-bounds", r_min=args.r_min, r_max=args.r_max, n_max=args.n_max)
    report = verify_prop31(range(args.r_min, args.r_max + 1), args.n_max)
    for part, count in sorted(report.checks.items()):
        print(f"part {part}: {count} checks")
    for v in report.violations:
        print(f"violation part={v.part} r={v.r} n={v.n} s={v.s} detail={v.detail}")
    _result(checks=report.total_checks, violations=len(report.violations))
    return EXIT_OK if report.ok() else EXIT_VIOLATION


def cmd_verify_claims(args) -> int:
    _echo(
        "verify-claims",
        r=",".join(map(str, args.r)),
        trials=args.trials,
        n_max=args.n_max,
        seed=args.seed,
    )
    report = claim_sweep(args.r, args.trials, args.seed, n_max=args.n_max)
    for v in report.vertex_violations:
        print(f"vertex violation: {v}")
    for v in report.claim45_failures:
        print(f"level arithmetic failure: {v}")
    for v in report.induction_failures:
        print(f"deletion bound violation: {v}")
    for v in report.packing_defects:
        print(f"packing defect: {v}")
    print(f"level-1 deletion records: {len(report.level1_records)}")
    _result(
        seed=args.seed,
        instances=report.instances,
        vertex_violations=len(report.vertex_violations),
        claim45_failures=len(report.claim45_failures),
        induction_failures=len(report.induction_failures),
        packing_defects=len(report.packing_defects),
        level1_records=len(report.level1_records),
    )
    return EXIT_OK if report.ok() else EXIT_VIOLATION


def cmd_search(args) -> int:
    mode = args.mode
    if mode == "auto":
        mode = "oracle" if (args.k + 1) ** comb(args.n, 2) <= 10**6 else "bnb"
    _echo(
        "search",
        n=args.n,
        r=args.r,
        k=args.k,
        mode=mode,
        budget=args.budget,
        time_limit=args.time_limit,
        symmetry=args.symmetry,
        threads=_threads(args),
        backend=kernel_backend(),
        seed=args.seed,
    )
    if mode == "oracle":
        report = brute_force_optimum(args.n, args.r, args.k)
    else:
        report = bnb_optimum(
            args.n,
            args.r,
            args.k,
            max_nodes=args.budget,
            max_seconds=args.time_limit,
            symmetry=args.symmetry,
        )
    if args.witness:
        save_weighted(args.witness, report.witness)
    if not report.complete:
        print("budget exhausted: optimum below is a verified lower bound only")
    _result(
        optimum=report.optimum,
        nodes_explored=report.nodes_explored,
        nodes_pruned=report.nodes_pruned,
        elapsed=f"{report.elapsed:.3f}",
        mode=report.mode,
        complete=report.complete,
    )
    return EXIT_OK if report.complete else EXIT_RESOURCE


def _grid_cell(job):
    r_values, n_max, k_policy, budget = job
    return verify_conjecture_grid(r_values, n_max, k_policy, max_nodes=budget)


def cmd_grid(args) -> int:
    threads = _threads(args)
    k_policy = args.k if args.k else "thresholds"
    _echo(
        "grid",
        r=",".join(map(str, args.r)),
        n_max=args.n_max,
        k=(",".join(map(str, args.k)) if args.k else "thresholds"),
        budget=args.budget,
        threads=threads,
        seed=args.seed,
    )
    if threads > 1 and len(args.r) > 1:
        jobs = [((r,), args.n_max, k_policy, args.budget) for r in sorted(set(args.r))]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_grid_cell, jobs))
        cells = tuple(cell for part in parts for cell in part.cells)
        from .search import GridReport

        report = GridReport(cells=cells)
    else:
        report = verify_conjecture_grid(args.r, args.n_max, k_policy, max_nodes=args.budget)
    for cell in report.cells:
        print(
            f"cell r={cell.r} n={cell.n} k={cell.k} optimum={cell.optimum} "
            f"bound={cell.bound} status={cell.status} mode={cell.mode}"
        )
    counts = report.counts()
    _result(
        equal=counts["EQUAL"],
        violations=counts["VIOLATION"],
        incomplete=counts["INCOMPLETE"],
    )
    if counts["VIOLATION"]:
        return EXIT_VIOLATION
    if counts["INCOMPLETE"]:
        return EXIT_RESOURCE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rblab", description="Rainbow clique extremal laboratory"
    )
    parser.add_argument("--version", action="version", version=f"rblab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("turan", help="Turan graph and edge count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parts", type=int, required=True)
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("check", help="rainbow clique detection on an rbsys file")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True, help="clique order of the pattern")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("nest", help="multiplicity-threshold nesting transform")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_nest)

    p = sub.add_parser("to-weighted", help="nested rbsys file to rbwt weighting")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_to_weighted)

    p = sub.add_parser("pack", help="greedy bounded-weight clique packing")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("verify-bounds", help="exact Turan inequality sweep")
    p.add_argument("--r-min", type=int, default=4)
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument("--n-max", type=int, default=400)
    p.set_defaults(func=cmd_verify_bounds)

    p = sub.add_parser("verify-claims", help="randomized packing/claims sweep")
    p.add_argument("--r", type=int, action="append", default=None)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_claims)

    p = sub.add_parser("search", help="exact optimum over staircase-free weightings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["auto", "bnb", "oracle"], default="bnb")
    p.add_argument("--budget", type=int, default=0, help="node limit, 0 = unlimited")
    p.add_argument("--time-limit", type=float, default=0.0, help="seconds, 0 = unlimited")
    p.add_argument("--symmetry", type=int, choices=[0, 1], default=1)
    p.add_argument("--witness", help="write the witness weighting to this rbwt file")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("grid", help="optimum vs conjectured bound over a grid")
    p.add_argument("--r", type=int, action="append", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, action="append", default=None)
    p.add_argument("--budget", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_grid)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-claims" and not args.r:
        args.r = [4, 5]
    try:
        return args.func(args)
    except (FormatError, InvalidParameterError, ContractViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
