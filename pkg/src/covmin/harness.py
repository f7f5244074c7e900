"""End-to-end pipeline and benchmark harness.

`run_pipeline` chains clustering, coverage construction, problem reduction
and the genetic search, and returns a result whose JSON form is a pure
function of (dataset, config, seed). `bench` runs the pipeline against the
baseline algorithms over repeated derived seeds and tabulates sizes, costs
and effect sizes.
"""

from __future__ import annotations

import csv
import json
import logging
import time
from dataclasses import dataclass

from . import baselines
from .baselines import SelectionResult
from .blocks import CoverageMap, build_coverage
from .config import RunConfig
from .dataset import Dataset
from .reduction import ReductionResult, reduce_problem
from .search import MoccoParams, mocco_run

logger = logging.getLogger(__name__)


def component_seed(seed: int, index: int) -> int:
    """Per-component search seed, decorrelated from the run seed."""
    return seed ^ index


def assemble_solution(reduction: ReductionResult, per_component) -> frozenset:
    """Union of the necessary inputs and every component's minimized set."""
    selected = set(reduction.necessary)
    for picked in per_component:
        selected |= set(picked)
    return frozenset(selected)


def vdr(selected, vulnerabilities) -> float:
    """Vulnerability detection rate: fraction of vulnerabilities for which
    some detecting group is wholly contained in the selected set."""
    if not vulnerabilities:
        logger.warning("no vulnerability records; detection rate defaults to 1.0")
        return 1.0
    chosen = frozenset(selected)
    detected = sum(
        1 for _, groups in vulnerabilities
        if any(group <= chosen for group in groups)
    )
    return detected / len(vulnerabilities)


@dataclass(frozen=True)
class PipelineResult:
    config_label: str
    seed: int
    selected: frozenset
    total_cost: int
    original_cost: int
    block_count: int
    necessary: frozenset
    component_sizes: tuple[int, ...]
    component_selected: tuple[frozenset, ...]
    reduction_iterations: int
    vdr: float

    def to_dict(self) -> dict:
        return {
            "config": self.config_label,
            "seed": self.seed,
            "selected": sorted(self.selected),
            "total_cost": self.total_cost,
            "original_cost": self.original_cost,
            "block_count": self.block_count,
            "necessary": sorted(self.necessary),
            "component_sizes": list(self.component_sizes),
            "component_selected": [sorted(s) for s in self.component_selected],
            "reduction_iterations": self.reduction_iterations,
            "vdr": self.vdr,
        }


def run_pipeline(dataset: Dataset, config: RunConfig, seed: int | None = None,
                 coverage: CoverageMap | None = None) -> PipelineResult:
    """Full minimization run. Deterministic for a given (dataset, config,
    seed); wall-clock time is deliberately kept out of the result."""
    if seed is None:
        seed = config.seed
    costs = dataset.costs()
    if coverage is None:
        coverage = build_coverage(dataset, config, seed)
    reduction = reduce_problem(frozenset(costs), coverage.cover, costs)
    per_component = []
    params_base = MoccoParams(
        n_size=config.n_size,
        generations=config.generations,
        time_budget_ms=config.time_budget_ms,
    )
    for idx, comp in enumerate(reduction.components):
        params = MoccoParams(
            n_size=params_base.n_size,
            generations=params_base.generations,
            time_budget_ms=params_base.time_budget_ms,
            seed=component_seed(seed, idx),
        )
        per_component.append(mocco_run(comp, coverage.cover, costs, params))
    selected = assemble_solution(reduction, per_component)
    return PipelineResult(
        config_label=config.label(),
        seed=seed,
        selected=selected,
        total_cost=sum(costs[i] for i in selected),
        original_cost=sum(costs.values()),
        block_count=len(coverage.all_blocks()),
        necessary=reduction.necessary,
        component_sizes=tuple(len(c.inputs) for c in reduction.components),
        component_selected=tuple(per_component),
        reduction_iterations=reduction.iterations,
        vdr=vdr(selected, dataset.vulnerabilities),
    )


def write_result(result: PipelineResult, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(result.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


ALGORITHMS = ("mocco", "greedy", "random", "art", "exhaustive")


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    config_label: str
    seed: int
    repetition: int
    size: int
    cost: int
    runtime_ms: float
    vdr: float
    covers_all: bool

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "config": self.config_label,
            "seed": self.seed,
            "repetition": self.repetition,
            "size": self.size,
            "cost": self.cost,
            "runtime_ms": round(self.runtime_ms, 3),
            "vdr": self.vdr,
            "covers_all": self.covers_all,
        }


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    a12: dict[tuple[str, str], float]

    def to_dict(self) -> dict:
        return {
            "rows": [r.to_dict() for r in self.rows],
            "a12_cost": {f"{a}|{b}": v for (a, b), v in sorted(self.a12.items())},
        }


def _run_reduced_algorithm(name: str, dataset: Dataset, coverage: CoverageMap,
                           reduction: ReductionResult, config: RunConfig,
                           seed: int) -> SelectionResult:
    costs = dataset.costs()
    per_component = []
    for idx, comp in enumerate(reduction.components):
        if name == "mocco":
            params = MoccoParams(
                n_size=config.n_size,
                generations=config.generations,
                time_budget_ms=config.time_budget_ms,
                seed=component_seed(seed, idx),
            )
            per_component.append(mocco_run(comp, coverage.cover, costs, params))
        else:
            result = baselines.exhaustive_optimal(comp, coverage.cover, costs, seed)
            per_component.append(result.selected)
    selected = assemble_solution(reduction, per_component)
    return SelectionResult(
        selected=selected,
        total_cost=sum(costs[i] for i in selected),
        covers_all=True,
        algorithm=name,
        seed=seed,
    )


def run_repetition(dataset: Dataset, config: RunConfig, algorithms,
                   seed: int, repetition: int,
                   coverage: CoverageMap | None = None) -> list[BenchRow]:
    """One benchmark repetition. The greedy, random and adaptive-sampling
    baselines run on the full instance; the genetic search and the exact
    solver run after problem reduction. The random baseline draws as many
    inputs as the largest selection produced by the other algorithms in the
    same repetition (or the reduced instance size when it runs alone)."""
    costs = dataset.costs()
    if coverage is None:
        coverage = build_coverage(dataset, config, seed)
    reduction = reduce_problem(frozenset(costs), coverage.cover, costs)
    universe = coverage.all_blocks()
    rows: list[BenchRow] = []
    sizes: list[int] = []

    def record(result: SelectionResult, runtime_ms: float) -> None:
        rows.append(BenchRow(
            algorithm=result.algorithm,
            config_label=config.label(),
            seed=seed,
            repetition=repetition,
            size=len(result.selected),
            cost=result.total_cost,
            runtime_ms=runtime_ms,
            vdr=vdr(result.selected, dataset.vulnerabilities),
            covers_all=result.covers_all,
        ))
        sizes.append(len(result.selected))

    for name in algorithms:
        if name == "random":
            continue  # needs the other selection sizes; runs last
        started = time.perf_counter()
        if name in ("mocco", "exhaustive"):
            result = _run_reduced_algorithm(
                name, dataset, coverage, reduction, config, seed)
        elif name == "greedy":
            result = baselines.greedy_cover(
                universe, frozenset(costs), coverage.cover, costs, seed)
        elif name == "art":
            result = baselines.art_select(dataset, config, seed)
        else:
            raise ValueError(f"unknown algorithm {name!r}")
        record(result, (time.perf_counter() - started) * 1000.0)

    if "random" in algorithms:
        if sizes:
            n = max(sizes)
        else:
            n = len(reduction.necessary) + sum(
                len(c.inputs) for c in reduction.components)
        started = time.perf_counter()
        result = baselines.random_select(frozenset(costs), n, costs, seed)
        covered = coverage.cover_of_set(result.selected)
        result = SelectionResult(
            selected=result.selected,
            total_cost=result.total_cost,
            covers_all=covered >= universe,
            algorithm=result.algorithm,
            seed=result.seed,
        )
        record(result, (time.perf_counter() - started) * 1000.0)
    return rows


def bench(dataset: Dataset, config: RunConfig, algorithms=ALGORITHMS,
          repetitions: int | None = None, seed: int | None = None,
          jobs: int = 1, coverage: CoverageMap | None = None) -> BenchReport:
    if seed is None:
        seed = config.seed
    if repetitions is None:
        repetitions = config.repetitions
    algorithms = tuple(algorithms)
    reps = [(dataset, config, algorithms, seed + r, r, coverage)
            for r in range(repetitions)]
    if jobs > 1 and repetitions > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_rep_star, reps))
    else:
        chunks = [run_repetition(*args) for args in reps]
    rows = tuple(row for chunk in chunks for row in chunk)

    cost_samples: dict[str, list[int]] = {name: [] for name in algorithms}
    for row in rows:
        cost_samples[row.algorithm].append(row.cost)
    a12: dict[tuple[str, str], float] = {}
    for a in algorithms:
        for b in algorithms:
            if a != b and cost_samples[a] and cost_samples[b]:
                a12[(a, b)] = baselines.a12_effect_size(
                    cost_samples[a], cost_samples[b])
    return BenchReport(rows=rows, a12=a12)


def _rep_star(args):
    return run_repetition(*args)


def write_bench_json(report: BenchReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_bench_csv(report: BenchReport, path) -> None:
    fields = ["algorithm", "config", "seed", "repetition", "size", "cost",
              "runtime_ms", "vdr", "covers_all"]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for row in report.rows:
            writer.writerow(row.to_dict())
