"""Run configuration: clustering choices, grids, and search parameters."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .clustering import HyperParamGrid


@dataclass(frozen=True)
class RunConfig:
    output_metric: str = "lev"          # lev | bag
    output_algo: str = "dbscan"         # kmeans | dbscan
    action_algo: str = "dbscan"
    shared_threshold: float = 0.8
    k_range: tuple[int, int] = (1, 70)
    eps_range: tuple[float, float] = (2.0, 10.0)
    eps_step: float | None = None
    min_neighbors_range: tuple[int, int] = (1, 5)
    n_size: int = 20
    generations: int = 100
    time_budget_ms: int | None = None
    repetitions: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.output_metric not in ("lev", "bag"):
            raise ValueError(f"unknown output metric: {self.output_metric!r}")
        for algo in (self.output_algo, self.action_algo):
            if algo not in ("kmeans", "dbscan"):
                raise ValueError(f"unknown clustering algorithm: {algo!r}")
        if self.n_size < 2:
            raise ValueError("population size must be at least 2")

    def grid(self, algo: str) -> HyperParamGrid:
        return HyperParamGrid(
            algo=algo,
            k_range=self.k_range,
            eps_range=self.eps_range,
            eps_step=self.eps_step,
            min_neighbors_range=self.min_neighbors_range,
        )

    def label(self) -> str:
        metric = "L" if self.output_metric == "lev" else "B"
        algo = {"kmeans": "K", "dbscan": "D"}
        return f"{metric}-{algo[self.output_algo]}-{algo[self.action_algo]}"

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        kwargs = {}
        for key in cls.__dataclass_fields__:
            if key in data:
                value = data[key]
                if isinstance(value, list):
                    value = tuple(value)
                kwargs[key] = value
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**kwargs)
