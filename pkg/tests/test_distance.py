import random

import numpy as np
import pytest

from covmin.dataset import Action, ParamValue, TokenDoc
from covmin.distance import (
    action_distance,
    bag_distance,
    levenshtein,
    normalize,
    output_distance,
    pairwise_matrix,
    param_distance,
    param_value_distance,
    params_match,
    url_distance,
)


def _text(s):
    return ParamValue(kind="text", text_value=s)


def _int(n):
    return ParamValue(kind="int", int_value=n)


def test_normalize_maps_to_unit_interval():
    assert normalize(0) == 0.0
    assert normalize(1) == 0.5
    assert normalize(32) == pytest.approx(32 / 33)
    with pytest.raises(ValueError):
        normalize(-1)


def test_levenshtein_known_values():
    assert levenshtein("John", "Johnny") == 2
    assert levenshtein("qwerty", "qwertyuiop") == 4
    assert levenshtein("", "abc") == 3
    assert levenshtein("kitten", "sitting") == 3
    assert levenshtein(("a", "b"), ("a", "c", "b")) == 1


def test_bag_distance_known_values():
    assert bag_distance("John", "Johnny") == 2
    assert bag_distance("abc", "cba") == 0
    assert bag_distance("aab", "abb") == 1


def test_bag_is_levenshtein_lower_bound_random_sweep():
    rng = random.Random(20240817)
    alphabet = "abcde"
    for _ in range(10_000):
        a = "".join(rng.choices(alphabet, k=rng.randrange(0, 12)))
        b = "".join(rng.choices(alphabet, k=rng.randrange(0, 12)))
        assert bag_distance(a, b) <= levenshtein(a, b)


def test_output_distance_dispatch():
    d1 = TokenDoc(tokens=("add", "user", "ok"))
    d2 = TokenDoc(tokens=("add", "ok", "user"))
    assert output_distance(d1, d2, "lev") == 2
    assert output_distance(d1, d2, "levenshtein") == 2
    assert output_distance(d1, d2, "bag") == 0
    with pytest.raises(ValueError):
        output_distance(d1, d2, "cosine")


def test_url_distance_worked_example():
    # /login vs /job/try1/lastBuild: one word past the shared prefix on one
    # side, three on the other.
    u1 = ("http", "hostname", "login")
    u2 = ("http", "hostname", "job", "try1", "lastBuild")
    assert url_distance(u1, u2) == 4
    assert url_distance(u1, u1) == 0


def test_url_distance_triangle_inequality_random_sweep():
    rng = random.Random(99)
    words = ["a", "b", "c"]

    def rand_url():
        return tuple(rng.choices(words, k=rng.randrange(1, 6)))

    for _ in range(10_000):
        x, y, z = rand_url(), rand_url(), rand_url()
        assert url_distance(x, z) <= url_distance(x, y) + url_distance(y, z)


def test_param_value_distance_kinds():
    assert param_value_distance(_int(10), _int(42)) == 32
    assert param_value_distance(_text("John"), _text("Johnny")) == 2
    assert param_value_distance(_int(10), _text("10")) is None


def test_param_distance_worked_example():
    # Per-value distances 32, 2, 4 normalize to 32/33, 2/3, 4/5; the
    # normalized sum lands near 0.71.
    p1 = (("a", _int(10)), ("b", _text("John")), ("c", _text("qwerty")))
    p2 = (("a", _int(42)), ("b", _text("Johnny")), ("c", _text("qwertyuiop")))
    assert params_match(p1, p2)
    assert param_distance(p1, p2) == pytest.approx(0.71, abs=0.005)


def test_param_distance_is_one_exactly_when_lists_do_not_match():
    matched = (("a", _int(1)),)
    assert param_distance(matched, (("a", _int(1)),)) == 0.0
    # Different lengths.
    assert param_distance(matched, ()) == 1.0
    # Same length, different kind at one position.
    assert param_distance(matched, (("a", _text("1")),)) == 1.0


def test_param_distance_range_random_sweep():
    rng = random.Random(7)

    def rand_params():
        out = []
        for i in range(rng.randrange(0, 4)):
            if rng.random() < 0.5:
                out.append((f"p{i}", _int(rng.randrange(0, 50))))
            else:
                out.append((f"p{i}", _text("".join(rng.choices("xyz", k=3)))))
        return tuple(out)

    for _ in range(2000):
        p1, p2 = rand_params(), rand_params()
        d = param_distance(p1, p2)
        assert 0.0 <= d <= 1.0
        if d == 1.0:
            assert not params_match(p1, p2)


def test_action_distance_combines_url_and_params():
    a1 = Action(method="GET", url_words=("http", "hostname", "login"),
                params=(("q", _int(10)),))
    a2 = Action(method="GET", url_words=("http", "hostname", "job", "try1", "lastBuild"),
                params=(("q", _int(42)),))
    d = action_distance(a1, a2)
    assert d.url_part == 4
    assert d.param_part == pytest.approx(normalize(normalize(32)))
    assert d.value == pytest.approx(4 + d.param_part)
    assert int(d.value) == d.url_part


def test_pairwise_matrix_shape_and_symmetry():
    items = ["ab", "abc", "zzz"]
    m = pairwise_matrix(items, levenshtein)
    assert m.shape == (3, 3)
    assert np.allclose(m, m.T)
    assert np.allclose(np.diag(m), 0.0)
    assert m[0, 1] == 1
    assert m[0, 2] == 3
