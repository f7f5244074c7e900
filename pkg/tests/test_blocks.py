from covmin.blocks import (
    BlockId,
    CoverageMap,
    build_action_sets,
    build_coverage,
    cluster_actions,
    cluster_outputs,
    partition_by_method,
)
from covmin.config import RunConfig
from covmin.dataset import Action, Dataset, InputRecord, split_url
from covmin.synthetic import make_synthetic_dataset

CONFIG = RunConfig()


def _record(input_id, specs, cost=1):
    # specs: list of (method, url, output text)
    return InputRecord(
        id=input_id,
        actions=tuple(
            Action(method=m, url_words=split_url(u)) for m, u, _ in specs
        ),
        outputs=tuple(text for _, _, text in specs),
        mr_action_counts={"mr": cost},
    )


LOGIN_PAGE = "login panel credentials username password field prompt gate"
JOBS_PAGE = "pipeline builds artifact workspace schedule trigger queue node"


def _two_page_dataset():
    return Dataset(inputs=(
        _record(1, [("GET", "http://h/login", LOGIN_PAGE),
                    ("GET", "http://h/jobs", JOBS_PAGE)]),
        _record(2, [("POST", "http://h/login", LOGIN_PAGE)]),
        _record(3, [("GET", "http://h/jobs", JOBS_PAGE)]),
    ))


def test_block_id_string_roundtrip():
    bl = BlockId(3, "POST", 1)
    assert BlockId.from_str(bl.as_str()) == bl
    assert bl.as_str() == "3:POST:1"


def test_coverage_map_inversion():
    b1, b2 = BlockId(0, "GET", 0), BlockId(1, "GET", 0)
    cm = CoverageMap.from_cover({1: frozenset({b1, b2}), 2: frozenset({b2})})
    assert cm.inputs_of[b1] == frozenset({1})
    assert cm.inputs_of[b2] == frozenset({1, 2})
    assert cm.all_blocks() == frozenset({b1, b2})
    assert cm.cover_of_set({2}) == frozenset({b2})


def test_cluster_outputs_separates_distinct_pages():
    assignments = cluster_outputs(_two_page_dataset(), CONFIG, seed=0)
    login_cls = assignments[(1, 0)]
    jobs_cls = assignments[(1, 1)]
    assert login_cls != jobs_cls
    assert assignments[(2, 0)] == login_cls
    assert assignments[(3, 0)] == jobs_cls


def test_build_action_sets_groups_by_class():
    assignments = {(1, 0): 0, (1, 1): 1, (2, 0): 0}
    sets = build_action_sets(assignments)
    assert sets == {0: [(1, 0), (2, 0)], 1: [(1, 1)]}


def test_partition_by_method():
    ds = _two_page_dataset()
    get_part, post_part = partition_by_method(ds, [(1, 0), (1, 1), (2, 0)])
    assert get_part == [(1, 0), (1, 1)]
    assert post_part == [(2, 0)]


def test_cluster_actions_identical_actions_single_subclass():
    ds = _two_page_dataset()
    labels = cluster_actions(ds, [(1, 0), (2, 0)], CONFIG, seed=0)
    assert labels == [0, 0]
    assert cluster_actions(ds, [(1, 1)], CONFIG, seed=0) == [0]


def test_cluster_actions_separates_distant_urls():
    ds = Dataset(inputs=(
        _record(1, [("GET", "http://h/a/b/c/d", LOGIN_PAGE)]),
        _record(2, [("GET", "http://h/a/b/c/d", LOGIN_PAGE)]),
        _record(3, [("GET", "http://h/x/y/z/w", LOGIN_PAGE)]),
        _record(4, [("GET", "http://h/x/y/z/w", LOGIN_PAGE)]),
    ))
    config = RunConfig(eps_range=(1.0, 10.0))
    labels = cluster_actions(ds, [(1, 0), (2, 0), (3, 0), (4, 0)], config, seed=0)
    assert labels[0] == labels[1]
    assert labels[2] == labels[3]
    assert labels[0] != labels[2]


def test_build_coverage_two_pages():
    ds = _two_page_dataset()
    cm = build_coverage(ds, CONFIG, seed=0)
    # login GET, login POST, jobs GET.
    assert len(cm.all_blocks()) == 3
    methods = sorted(bl.method for bl in cm.all_blocks())
    assert methods == ["GET", "GET", "POST"]
    assert len(cm.cover[1]) == 2
    assert len(cm.cover[2]) == 1
    assert len(cm.cover[3]) == 1
    # Inputs 1 and 3 share the jobs GET block.
    assert cm.cover[3] < cm.cover[1] | cm.cover[3]
    assert next(iter(cm.cover[3])) in cm.cover[1]


def test_build_coverage_on_synthetic_dataset_recovers_planted_blocks():
    ds = make_synthetic_dataset()
    cm = build_coverage(ds, CONFIG, seed=0)
    assert len(cm.all_blocks()) == 38
    # Every input's block count equals its number of distinct planted pages.
    for rec in ds.inputs:
        assert len(cm.cover[rec.id]) == len(set(rec.outputs))
