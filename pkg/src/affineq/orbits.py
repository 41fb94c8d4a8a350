"""Depth-graded census of the Weyl orbit of the Weyl vector.

Two independent routes: an exact breadth-first closure (oracle, small Weyl
orders) and a scalable counter that searches dominant finite weights inside
a norm ball and tests orbit membership by straightening.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .algebra import AlgebraId, affine_cartan, horizontal
from .series import QSeries
from .weights import (
    AffineWeight,
    FiniteWeight,
    depth_from_norm,
    finite_orbit_size,
    straighten,
    weyl_vector,
)

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """The breadth-first enumeration would exceed the node budget."""


@dataclass(frozen=True)
class DepthCensus:
    algebra: AlgebraId
    max_depth: int
    counts: tuple[int, ...]  # |W_M| for M = 0..max_depth
    c: tuple[int, ...]       # permutation-weight counts c_M


@dataclass(frozen=True)
class PermutationWeightRecord:
    depth: int
    dominant: FiniteWeight
    orbit_size: int
    word: tuple[int, ...]  # maps the Weyl vector to this weight


def enumerate_bfs(
    id: AlgebraId,
    max_depth: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    collect_dominants: bool = False,
):
    """Exact counts by breadth-first closure from the Weyl vector,
    expanding every reflection in the length-increasing direction
    (positive label) and discarding weights beyond max_depth."""
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    data = affine_cartan(id)
    w_order = horizontal(id).weyl_order
    if w_order * (max_depth + 1) > node_budget:
        raise BudgetExceededError(
            f"estimated {w_order * (max_depth + 1)} nodes for {id} at depth "
            f"{max_depth} exceeds budget {node_budget}"
        )
    cartan = data.cartan
    n = data.n_nodes
    cols = [tuple(cartan[j][i] for j in range(n)) for i in range(n)]
    root = weyl_vector(id)
    start = (root.labels, 0)
    seen = {start}
    queue = deque([start])
    counts = [0] * (max_depth + 1)
    c = [0] * (max_depth + 1)
    dominants: list[tuple[int, FiniteWeight]] = []
    while queue:
        labels, depth = queue.popleft()
        counts[depth] += 1
        if min(labels[1:]) > 0:
            c[depth] += 1
            if collect_dominants:
                dominants.append((depth, labels[1:]))
        for i in range(n):
            a = labels[i]
            if a <= 0:
                continue
            child_depth = depth + (a if i == 0 else 0)
            assert child_depth >= depth  # depth monotone along expansion
            if child_depth > max_depth:
                continue
            col = cols[i]
            child = (tuple(x - a * y for x, y in zip(labels, col)), child_depth)
            if child not in seen:
                if len(seen) >= node_budget:
                    raise BudgetExceededError(
                        f"node budget {node_budget} exhausted for {id}"
                    )
                seen.add(child)
                queue.append(child)
    census = DepthCensus(id, max_depth, tuple(counts), tuple(c))
    if collect_dominants:
        return census, sorted(dominants)
    return census


def _dominant_candidates(id: AlgebraId, max_depth: int) -> list[FiniteWeight]:
    """All strictly dominant finite weights inside the norm ball that can
    hold depths <= max_depth.  Depth-first box search; pruning is sound
    because every Gram entry is positive, so the norm is monotone in each
    label on the dominant cone."""
    hor = horizontal(id)
    k = affine_cartan(id).dual_coxeter
    n = hor.rank
    denom = math.lcm(*(x.denominator for row in hor.gram for x in row))
    h = [[int(x * denom) for x in row] for row in hor.gram]
    bound = (hor.rho_norm + 2 * k * max_depth) * denom
    assert bound.denominator == 1
    bound = int(bound)

    def norm(v: list[int]) -> int:
        total = 0
        for i in range(n):
            row = h[i]
            vi = v[i]
            total += vi * sum(row[j] * v[j] for j in range(n))
        return total

    out: list[FiniteWeight] = []
    v = [1] * n

    def descend(pos: int) -> None:
        if pos == n:
            out.append(tuple(v))
            return
        v[pos] = 1
        while norm(v) <= bound:
            descend(pos + 1)
            v[pos] += 1
        v[pos] = 1

    if norm(v) <= bound:
        descend(0)
    return out


def count_via_permutation_weights(
    id: AlgebraId, max_depth: int
) -> tuple[DepthCensus, list[PermutationWeightRecord]]:
    """Census without materializing the orbit: candidate dominant weights
    from the norm ball, filtered by the integrality of the depth relation,
    then by straightening back onto the Weyl vector."""
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    data = affine_cartan(id)
    hor = horizontal(id)
    k = data.dual_coxeter
    comarks = data.comarks
    records: list[PermutationWeightRecord] = []
    for f in _dominant_candidates(id, max_depth):
        # the norm relation pins at most one depth per dominant weight
        m = depth_from_norm(id, f)
        if m is None or m == 0 or m > max_depth:
            continue
        # embed at level k, depth placeholder 0
        num = k - sum(c * x for c, x in zip(comarks[1:], f))
        if num % comarks[0] != 0:
            continue
        w = AffineWeight(labels=(num // comarks[0],) + f, depth=0)
        res = straighten(id, w)
        if any(x != 1 for x in res.dominant.labels):
            continue
        if res.dominant.depth != -m:
            raise AssertionError(
                f"depth cross-check failed for {id}, {f}: "
                f"straightened depth {res.dominant.depth}, expected {-m}"
            )
        records.append(
            PermutationWeightRecord(
                depth=m,
                dominant=f,
                orbit_size=finite_orbit_size(id, f),
                word=tuple(reversed(res.word)),
            )
        )
    records.sort(key=lambda r: (r.depth, r.dominant))
    counts = [0] * (max_depth + 1)
    c = [0] * (max_depth + 1)
    counts[0] = hor.weyl_order
    c[0] = 1
    for r in records:
        counts[r.depth] += r.orbit_size
        c[r.depth] += 1
    return DepthCensus(id, max_depth, tuple(counts), tuple(c)), records


def census_to_series(census: DepthCensus) -> QSeries:
    return QSeries(census.max_depth, census.counts)
