"""Command-line front end.

Subcommands: recommend, taxonomy ls, solve knapsack|tsp, fit hw,
bench ga-vs-dp, gen knapsack|tsp. Every subcommand accepts --seed.
Relative --out paths are resolved inside $NIAKIT_OUT_DIR when that
variable is set. Exit status: 0 on success, 2 on usage errors, 1 on
runtime errors.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from ..algorithms.aco import AcoParams
from ..benchmarks.holtwinters import read_series_csv, synthetic_seasonal_series, write_series_csv
from ..benchmarks.knapsack import (
    knapsack_brute_force,
    knapsack_dp,
    knapsack_greedy,
    knapsack_meet_in_middle,
    knapsack_problem,
    random_knapsack,
    read_knapsack,
    repair_bits,
    write_knapsack,
)
from ..benchmarks.tsp import (
    nearest_neighbor_tour,
    random_tsp,
    read_tsplib,
    tour_length,
    tsp_branch_and_bound,
    tsp_brute_force,
    tsp_problem,
    two_opt,
    write_tsplib,
)
from ..core.run import Budget, run_optimizer
from ..errors import NiakitError
from ..taxonomy.model import bundled_taxonomy, load_taxonomy
from ..taxonomy.recommend import (
    COOPERATIONS,
    DATA_REGIMES,
    GOAL_TAGS,
    MODALITIES,
    ProblemDescriptor,
    bundled_rules,
    load_rules,
    triz_map,
)
from .bench import bench_ga_vs_dp, emit_report
from .fitting import DEFAULT_FOA_EVALUATIONS, fit_holtwinters


class UsageError(Exception):
    """Bad argument values; reported with usage text and exit status 2."""


OUT_DIR_ENV = "NIAKIT_OUT_DIR"


def _resolve_out(path: str) -> str:
    """Default directory for written files: relative paths are joined
    onto $NIAKIT_OUT_DIR when it is set; absolute paths pass through."""
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _split_tags(raw: str) -> ProblemDescriptor:
    """Sort a mixed comma-separated tag list into descriptor facets."""
    goals: set[str] = set()
    modality = None
    cooperation = None
    data_regime = None
    for token in raw.split(","):
        tag = token.strip().casefold()
        if not tag:
            continue
        if tag in GOAL_TAGS:
            goals.add(tag)
        elif tag in MODALITIES:
            if modality is not None:
                raise UsageError(f"two modalities given: {modality}, {tag}")
            modality = tag
        elif tag in COOPERATIONS:
            cooperation = tag
        elif tag in DATA_REGIMES:
            data_regime = tag
        else:
            known = sorted(GOAL_TAGS | MODALITIES | COOPERATIONS | DATA_REGIMES)
            raise UsageError(f"unknown tag {tag!r}; known tags: {', '.join(known)}")
    if not goals:
        raise UsageError(f"need at least one goal tag from: {', '.join(sorted(GOAL_TAGS))}")
    if modality is None:
        raise UsageError(f"need a modality tag from: {', '.join(sorted(MODALITIES))}")
    return ProblemDescriptor(
        goal_tags=frozenset(goals), modality=modality, cooperation=cooperation, data_regime=data_regime
    )


def _cmd_recommend(args) -> int:
    descriptor = _split_tags(args.tags)
    taxonomy = load_taxonomy(args.taxonomy) if args.taxonomy else bundled_taxonomy()
    rules = load_rules(args.rules) if args.rules else bundled_rules()
    rec = triz_map(descriptor, taxonomy=taxonomy, rules=rules)
    print(f"conceptual goal: {'/'.join(rec.conceptual_goal)}")
    for rank, item in enumerate(rec.top(args.top), start=1):
        marker = "  [implemented]" if item.entry.implemented else ""
        print(f"{rank}. {item.entry.name}  score {item.score:.3f}{marker}  {'/'.join(item.matched_path)}")
        print(f"   {item.rationale}")
    return 0


def _cmd_taxonomy_ls(args) -> int:
    taxonomy = load_taxonomy(args.taxonomy) if args.taxonomy else bundled_taxonomy()
    if args.path:
        entries = taxonomy.children(tuple(p for p in args.path.split("/") if p))
    else:
        entries = sorted(taxonomy.entries, key=lambda e: e.name.casefold())
    for e in entries:
        marker = "  [implemented]" if e.implemented else ""
        paths = "; ".join(str(p) for p in e.paths)
        alias = f"  (aliases: {', '.join(sorted(e.aliases))})" if e.aliases else ""
        print(f"{e.name}{marker}  {paths}{alias}")
    return 0


def _cmd_solve_knapsack(args) -> int:
    inst = read_knapsack(args.infile)
    if args.algo == "dp":
        value, bits = knapsack_dp(inst)
    elif args.algo == "greedy":
        value, bits = knapsack_greedy(inst)
    elif args.algo == "brute":
        value, bits = knapsack_brute_force(inst)
    elif args.algo == "mitm":
        value, bits = knapsack_meet_in_middle(inst)
    else:  # ga
        budget = Budget(max_evaluations=args.budget)
        record = run_optimizer(knapsack_problem(inst), "ga", budget, args.seed)
        bits = repair_bits(inst, np.asarray(record.best))
        value = inst.value_of(bits)
    print(int(value))
    print("items " + " ".join(str(i) for i in np.flatnonzero(np.asarray(bits))))
    return 0


def _cmd_solve_tsp(args) -> int:
    inst = read_tsplib(args.infile)
    status = None
    if args.algo == "brute":
        length, tour = tsp_brute_force(inst)
    elif args.algo == "bnb":
        result = tsp_branch_and_bound(inst, time_limit=args.time_limit)
        length, tour, status = result.length, result.tour, result.status
    elif args.algo == "nn":
        tour = two_opt(inst, nearest_neighbor_tour(inst))
        length = tour_length(inst, tour)
    else:  # aco or ga
        budget = Budget(max_evaluations=args.budget)
        params = AcoParams() if args.algo == "aco" else None
        record = run_optimizer(tsp_problem(inst), args.algo, budget, args.seed, params=params)
        length, tour = record.best_fitness, np.asarray(record.best)
    print(repr(float(length)))
    print("tour " + " ".join(str(c) for c in tour))
    if status is not None:
        print(f"status {status}")
    return 0


def _cmd_fit_hw(args) -> int:
    values, sidecar_m = read_series_csv(args.infile)
    season_length = args.season_length if args.season_length else sidecar_m
    if season_length is None:
        raise UsageError("season length not found in sidecar; pass --season-length")
    result = fit_holtwinters(
        values, season_length, method=args.algo, seed=args.seed, max_evaluations=args.budget
    )
    p = result.params
    print(f"alpha {p.alpha!r} beta {p.beta!r} gamma {p.gamma!r}")
    print(f"sse {result.sse!r}")
    print(f"evaluations {result.evaluations}")
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    if not sizes:
        raise UsageError("--sizes needs a comma-separated list of instance sizes")
    report = bench_ga_vs_dp(
        sizes,
        tightness=args.tightness,
        repetitions=args.reps,
        seed=args.seed,
        ga_budget=args.budget,
    )
    print(",".join(("n", "algorithm", "median_ms", "best_value", "optimum", "ratio")))
    for r in report.rows:
        print(f"{r.n},{r.algorithm},{r.median_ms:.3f},{r.best_value!r},{r.optimum!r},{r.ratio!r}")
    if "slope_dp" in report.meta:
        print(f"slope dp {report.meta['slope_dp']:.3f}")
        print(f"slope ga {report.meta['slope_ga']:.3f}")
    if args.out:
        out = _resolve_out(args.out)
        emit_report(report, args.format, out)
        print(f"wrote {out}")
    return 0


def _cmd_gen(args) -> int:
    out = _resolve_out(args.out)
    if args.family == "knapsack":
        inst = random_knapsack(args.n, args.tightness, args.seed)
        write_knapsack(inst, out)
    elif args.family == "tsp":
        inst = random_tsp(args.n, seed=args.seed, metric=args.metric)
        write_tsplib(inst, out)
    else:  # series
        y = synthetic_seasonal_series(season_length=args.season_length, seasons=args.seasons, seed=args.seed)
        write_series_csv(out, y, season_length=args.season_length)
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="niakit", description="Nature-inspired solvers, exact baselines, and the goal catalogue."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_seed(p):
        p.add_argument("--seed", type=int, default=0, help="run seed (default 0)")

    p = sub.add_parser("recommend", help="rank algorithms for a tagged problem")
    p.add_argument("--tags", required=True, help="comma-separated goal/modality/cooperation/data tags")
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--taxonomy", help="catalogue JSON (default: bundled)")
    p.add_argument("--rules", help="rule table JSON (default: bundled)")
    add_seed(p)
    p.set_defaults(fn=_cmd_recommend)

    p = sub.add_parser("taxonomy", help="browse the algorithm catalogue")
    tsub = p.add_subparsers(dest="taxonomy_command", required=True)
    pls = tsub.add_parser("ls", help="list entries, optionally under a path prefix")
    pls.add_argument("path", nargs="?", help="e.g. Biology/ResourceSeeking/FoodSeeking")
    pls.add_argument("--taxonomy", help="catalogue JSON (default: bundled)")
    add_seed(pls)
    pls.set_defaults(fn=_cmd_taxonomy_ls)

    p = sub.add_parser("solve", help="run a solver on an instance file")
    ssub = p.add_subparsers(dest="family", required=True)
    pk = ssub.add_parser("knapsack")
    pk.add_argument("--algo", required=True, choices=["dp", "greedy", "brute", "mitm", "ga"])
    pk.add_argument("--in", dest="infile", required=True)
    pk.add_argument("--budget", type=int, default=50_000, help="GA evaluation budget")
    add_seed(pk)
    pk.set_defaults(fn=_cmd_solve_knapsack)
    pt = ssub.add_parser("tsp")
    pt.add_argument("--algo", required=True, choices=["brute", "bnb", "nn", "aco", "ga"])
    pt.add_argument("--in", dest="infile", required=True)
    pt.add_argument("--budget", type=int, default=20_000, help="ACO/GA evaluation budget")
    pt.add_argument("--time-limit", type=float, default=None, help="branch-and-bound limit in seconds")
    add_seed(pt)
    pt.set_defaults(fn=_cmd_solve_tsp)

    p = sub.add_parser("fit", help="fit model parameters")
    fsub = p.add_subparsers(dest="model", required=True)
    ph = fsub.add_parser("hw", help="triple exponential smoothing coefficients")
    ph.add_argument("--in", dest="infile", required=True, help="t,y CSV series")
    ph.add_argument("--algo", default="foa", choices=["foa", "grid"])
    ph.add_argument("--season-length", type=int, default=None)
    ph.add_argument("--budget", type=int, default=DEFAULT_FOA_EVALUATIONS)
    add_seed(ph)
    ph.set_defaults(fn=_cmd_fit_hw)

    p = sub.add_parser("bench", help="timing benchmarks")
    bsub = p.add_subparsers(dest="bench_kind", required=True)
    pb = bsub.add_parser("ga-vs-dp", help="exact DP against the budgeted GA across sizes")
    pb.add_argument("--sizes", required=True, help="comma-separated instance sizes")
    pb.add_argument("--tightness", type=float, default=0.5)
    pb.add_argument("--reps", type=int, default=3)
    pb.add_argument("--budget", type=int, default=50_000, help="GA evaluation budget")
    pb.add_argument("--out", help="report file (relative paths land in $NIAKIT_OUT_DIR when set)")
    pb.add_argument("--format", default="csv", choices=["csv", "json"])
    add_seed(pb)
    pb.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("gen", help="generate instance files")
    gsub = p.add_subparsers(dest="family", required=True)
    gk = gsub.add_parser("knapsack")
    gk.add_argument("--n", type=int, required=True)
    gk.add_argument("--tightness", type=float, default=0.5)
    gk.add_argument("--out", required=True, help="output file (relative paths land in $NIAKIT_OUT_DIR when set)")
    add_seed(gk)
    gk.set_defaults(fn=_cmd_gen, family="knapsack")
    gt = gsub.add_parser("tsp")
    gt.add_argument("--n", type=int, required=True)
    gt.add_argument("--metric", default="euclidean", choices=["euclidean", "manhattan"])
    gt.add_argument("--out", required=True, help="output file (relative paths land in $NIAKIT_OUT_DIR when set)")
    add_seed(gt)
    gt.set_defaults(fn=_cmd_gen, family="tsp")
    gs = gsub.add_parser("series")
    gs.add_argument("--season-length", type=int, default=12)
    gs.add_argument("--seasons", type=int, default=10)
    gs.add_argument("--out", required=True, help="output file (relative paths land in $NIAKIT_OUT_DIR when set)")
    add_seed(gs)
    gs.set_defaults(fn=_cmd_gen, family="series")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(parser.format_usage(), end="", file=sys.stderr)
        return 2
    except NiakitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
