import random

import pytest

from covmin.baselines import (
    InfeasibleError,
    a12_effect_size,
    art_select,
    exhaustive_optimal,
    greedy_cover,
    random_select,
)
from covmin.config import RunConfig
from covmin.reduction import Component
from covmin.synthetic import make_synthetic_dataset

from _oracles import bruteforce_min_cover, coverage_of, random_instance

GREEDY_COVER = {
    1: frozenset({"bl1", "bl2"}),
    2: frozenset({"bl1", "bl3"}),
    3: frozenset({"bl2", "bl4"}),
}
GREEDY_COSTS = {1: 2, 2: 3, 3: 3}
UNIVERSE = frozenset({"bl1", "bl2", "bl3", "bl4"})


def test_greedy_falls_into_ratio_trap():
    result = greedy_cover(UNIVERSE, frozenset(GREEDY_COVER), GREEDY_COVER, GREEDY_COSTS)
    assert result.selected == frozenset({1, 2, 3})
    assert result.total_cost == 8
    assert result.covers_all


def test_greedy_infeasible():
    with pytest.raises(InfeasibleError):
        greedy_cover(UNIVERSE | {"bl9"}, frozenset(GREEDY_COVER),
                     GREEDY_COVER, GREEDY_COSTS)


def test_greedy_always_covers_when_feasible():
    rng = random.Random(8)
    for _ in range(200):
        cover, costs = random_instance(rng)
        universe = coverage_of(cover, cover)
        result = greedy_cover(universe, frozenset(cover), cover, costs)
        assert coverage_of(result.selected, cover) >= universe


def test_random_select_reproducible_and_uniform_size():
    costs = {i: i for i in range(1, 11)}
    a = random_select(frozenset(costs), 4, costs, seed=9)
    b = random_select(frozenset(costs), 4, costs, seed=9)
    c = random_select(frozenset(costs), 4, costs, seed=10)
    assert a.selected == b.selected
    assert len(a.selected) == 4
    assert a.total_cost == sum(costs[i] for i in a.selected)
    assert a.selected != c.selected or True  # different seed may collide, size fixed
    with pytest.raises(ValueError):
        random_select(frozenset(costs), 11, costs)


def test_art_select_reproducible_and_covers_clusters():
    ds = make_synthetic_dataset()
    config = RunConfig()
    a = art_select(ds, config, seed=1)
    b = art_select(ds, config, seed=1)
    assert a.selected == b.selected
    assert a.selected
    assert not a.covers_all


def test_exhaustive_optimal_greedy_instance():
    comp = Component(inputs=frozenset(GREEDY_COVER), objectives=UNIVERSE)
    result = exhaustive_optimal(comp, GREEDY_COVER, GREEDY_COSTS)
    assert result.selected == frozenset({2, 3})
    assert result.total_cost == 6


def test_exhaustive_matches_bruteforce_random_sweep():
    rng = random.Random(55)
    for _ in range(100):
        cover, costs = random_instance(rng, max_inputs=8, max_blocks=8)
        objectives = coverage_of(cover, cover)
        comp = Component(inputs=frozenset(cover), objectives=objectives)
        result = exhaustive_optimal(comp, cover, costs)
        want, _ = bruteforce_min_cover(frozenset(cover), cover, costs, objectives)
        assert result.total_cost == want


def test_exhaustive_input_limit():
    cover = {i: frozenset({"b"}) for i in range(1, 25)}
    comp = Component(inputs=frozenset(cover), objectives=frozenset({"b"}))
    with pytest.raises(ValueError):
        exhaustive_optimal(comp, cover, {i: 1 for i in cover})


def test_exhaustive_infeasible():
    comp = Component(inputs=frozenset({1}), objectives=frozenset({"a", "b"}))
    with pytest.raises(InfeasibleError):
        exhaustive_optimal(comp, {1: frozenset({"a"})}, {1: 1})


def test_a12_effect_size_fixtures():
    assert a12_effect_size([1, 2, 3], [1, 2, 3]) == 0.5
    assert a12_effect_size([4, 5, 6], [1, 2, 3]) == 1.0
    assert a12_effect_size([1, 2, 3], [4, 5, 6]) == 0.0
    assert a12_effect_size([6], [8]) == 0.0
    assert a12_effect_size([2, 2], [2]) == 0.5
    with pytest.raises(ValueError):
        a12_effect_size([], [1])
