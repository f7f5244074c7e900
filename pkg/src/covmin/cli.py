"""Command line front end.

Subcommands: ingest, cluster, reduce, minimize, bench, oracle.
Exit codes: 0 on success, 2 on validation errors, 3 on infeasible instances.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import baselines, harness
from .blocks import BlockId, CoverageMap, build_coverage
from .config import RunConfig
from .dataset import Dataset, ValidationError, load_dataset
from .reduction import ReductionResult, reduce_problem

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3


def _load(args) -> tuple[Dataset, RunConfig]:
    dataset = load_dataset(args.dataset)
    config = RunConfig.from_file(args.config) if args.config else RunConfig()
    return dataset, config


def _seed(args, config: RunConfig) -> int:
    return args.seed if args.seed is not None else config.seed


def _write_json(obj, path) -> None:
    if path is None or path == "-":
        json.dump(obj, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_ingest(args) -> int:
    dataset, _ = _load(args)
    costs = dataset.costs()
    summary = {
        "inputs": len(dataset.inputs),
        "actions": sum(len(rec) for rec in dataset.inputs),
        "total_cost": sum(costs.values()),
        "vulnerabilities": len(dataset.vulnerabilities),
    }
    _write_json(summary, args.out)
    return EXIT_OK


def coverage_to_dict(coverage: CoverageMap) -> dict:
    return {
        "blocks": [
            {
                "id": bl.as_str(),
                "output_class": bl.output_class,
                "method": bl.method,
                "subclass_index": bl.subclass_index,
            }
            for bl in sorted(coverage.inputs_of)
        ],
        "cover": {
            str(i): sorted(bl.as_str() for bl in blocks)
            for i, blocks in sorted(coverage.cover.items())
        },
    }


def coverage_from_dict(obj: dict) -> CoverageMap:
    cover = {
        int(i): frozenset(BlockId.from_str(s) for s in blocks)
        for i, blocks in obj["cover"].items()
    }
    return CoverageMap.from_cover(cover)


def cmd_cluster(args) -> int:
    dataset, config = _load(args)
    coverage = build_coverage(dataset, config, _seed(args, config))
    _write_json(coverage_to_dict(coverage), args.out)
    return EXIT_OK


def reduction_to_dict(reduction: ReductionResult) -> dict:
    return {
        "necessary": sorted(reduction.necessary),
        "components": [
            {
                "inputs": sorted(comp.inputs),
                "objectives": sorted(bl.as_str() for bl in comp.objectives),
            }
            for comp in reduction.components
        ],
        "iterations": reduction.iterations,
    }


def cmd_reduce(args) -> int:
    dataset, config = _load(args)
    if args.coverage:
        with open(args.coverage, encoding="utf-8") as fh:
            coverage = coverage_from_dict(json.load(fh))
    else:
        coverage = build_coverage(dataset, config, _seed(args, config))
    costs = dataset.costs()
    reduction = reduce_problem(frozenset(costs), coverage.cover, costs)
    _write_json(reduction_to_dict(reduction), args.out)
    return EXIT_OK


def cmd_minimize(args) -> int:
    dataset, config = _load(args)
    result = harness.run_pipeline(dataset, config, _seed(args, config))
    _write_json(result.to_dict(), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    dataset, config = _load(args)
    algorithms = []
    for entry in args.algo or ["mocco,greedy,random,art"]:
        algorithms.extend(a for a in entry.split(",") if a)
    report = harness.bench(
        dataset, config,
        algorithms=algorithms,
        repetitions=args.reps,
        seed=_seed(args, config),
        jobs=args.jobs,
    )
    if args.out and args.out.endswith(".csv"):
        harness.write_bench_csv(report, args.out)
    else:
        _write_json(report.to_dict(), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    dataset, config = _load(args)
    seed = _seed(args, config)
    coverage = build_coverage(dataset, config, seed)
    costs = dataset.costs()
    reduction = reduce_problem(frozenset(costs), coverage.cover, costs)
    per_component = []
    for comp in reduction.components:
        result = baselines.exhaustive_optimal(comp, coverage.cover, costs, seed)
        per_component.append(result.selected)
    selected = harness.assemble_solution(reduction, per_component)
    _write_json({
        "selected": sorted(selected),
        "total_cost": sum(costs[i] for i in selected),
        "necessary": sorted(reduction.necessary),
    }, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covmin",
        description="Coverage-preserving minimization of action-sequence test suites.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, coverage_flag=False):
        p.add_argument("--dataset", required=True, help="dataset JSON file")
        p.add_argument("--config", help="run configuration JSON file")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        if coverage_flag:
            p.add_argument("--coverage", help="precomputed coverage JSON file")

    common(sub.add_parser("ingest", help="validate a dataset and print a summary"))
    common(sub.add_parser("cluster", help="build the coverage map"))
    common(sub.add_parser("reduce", help="reduce the minimization problem"),
           coverage_flag=True)
    common(sub.add_parser("minimize", help="run the full minimization pipeline"))
    p_bench = sub.add_parser("bench", help="compare algorithms over repetitions")
    common(p_bench)
    p_bench.add_argument("--algo", action="append",
                         help="algorithm name, repeatable or comma separated")
    p_bench.add_argument("--reps", type=int, default=None)
    p_bench.add_argument("--jobs", type=int, default=1)
    common(sub.add_parser("oracle", help="exact optimum via branch and bound"))
    return parser


_COMMANDS = {
    "ingest": cmd_ingest,
    "cluster": cmd_cluster,
    "reduce": cmd_reduce,
    "minimize": cmd_minimize,
    "bench": cmd_bench,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except baselines.InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc!r}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
