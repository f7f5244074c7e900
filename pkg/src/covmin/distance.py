"""Dissimilarity functions: edit distances, URL distance, parameter distance,
the composite action distance, and the normalization x/(x+1).

Output distances operate on word tokens; parameter string distances operate
on characters. Parameter matching is positional and kind-based.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .dataset import Action, ParamValue, TokenDoc


def normalize(x: float) -> float:
    """Map [0, inf) to [0, 1) monotonically: x / (x + 1)."""
    if x < 0:
        raise ValueError(f"normalize requires a non-negative value, got {x}")
    return x / (x + 1.0)


def levenshtein(a, b) -> int:
    """Unit-cost insert/delete/substitute edit distance over two sequences."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, xa in enumerate(a, start=1):
        cur = [i]
        for j, xb in enumerate(b, start=1):
            cur.append(min(
                prev[j] + 1,
                cur[j - 1] + 1,
                prev[j - 1] + (xa != xb),
            ))
        prev = cur
    return prev[-1]


def bag_distance(a, b) -> int:
    """Multiset lower bound of the edit distance, computed in linear time."""
    ca, cb = Counter(a), Counter(b)
    only_a = sum((ca - cb).values())
    only_b = sum((cb - ca).values())
    return max(only_a, only_b)


def output_distance(d1: TokenDoc, d2: TokenDoc, metric: str = "levenshtein") -> int:
    if metric in ("levenshtein", "lev"):
        return levenshtein(d1.tokens, d2.tokens)
    if metric == "bag":
        return bag_distance(d1.tokens, d2.tokens)
    raise ValueError(f"unknown output metric: {metric!r}")


def url_distance(u1, u2) -> int:
    """Words separating the two URLs from their longest common prefix."""
    lca = 0
    for w1, w2 in zip(u1, u2):
        if w1 != w2:
            break
        lca += 1
    return len(u1) + len(u2) - 2 * lca


def param_value_distance(v1: ParamValue, v2: ParamValue) -> int | None:
    """Character edit distance for text pairs, absolute difference for int
    pairs, None (undefined) for mixed kinds."""
    if v1.kind == "text" and v2.kind == "text":
        return levenshtein(v1.text_value, v2.text_value)
    if v1.kind == "int" and v2.kind == "int":
        return abs(v1.int_value - v2.int_value)
    return None


def params_match(p1, p2) -> bool:
    return len(p1) == len(p2) and all(
        a[1].kind == b[1].kind for a, b in zip(p1, p2)
    )


def param_distance(p1, p2) -> float:
    """In [0, 1]; exactly 1 iff the parameter lists do not match."""
    if not params_match(p1, p2):
        return 1.0
    total = 0.0
    for (_, v1), (_, v2) in zip(p1, p2):
        d = param_value_distance(v1, v2)
        total += normalize(d)
    return normalize(total)


@dataclass(frozen=True)
class ActionDistance:
    value: float
    url_part: int
    param_part: float


def action_distance(a1: Action, a2: Action) -> ActionDistance:
    """URL distance as the integral part, parameter distance as the decimal
    part. Method equality is enforced upstream by the request partition."""
    u = url_distance(a1.url_words, a2.url_words)
    p = param_distance(a1.params, a2.params)
    return ActionDistance(value=u + p, url_part=u, param_part=p)


def pairwise_matrix(items, dist) -> np.ndarray:
    """Symmetric float64 distance matrix with zero diagonal."""
    n = len(items)
    m = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            d = float(dist(items[i], items[j]))
            m[i, j] = d
            m[j, i] = d
    return m
