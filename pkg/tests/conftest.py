"""Shared brute-force oracles, kept independent of the code paths they check."""

from __future__ import annotations

from collections import deque

from affineq.algebra import AlgebraId, affine_cartan, horizontal
from affineq.weights import weyl_vector


def naive_euler_product(s: int, t: int) -> tuple[int, ...]:
    """Expand prod_{i<=t}(1 - q^{s*i}) by direct polynomial multiplication."""
    coeffs = [1] + [0] * t
    i = 1
    while s * i <= t:
        new = coeffs[:]
        for m in range(t + 1 - s * i):
            new[m + s * i] -= coeffs[m]
        coeffs = new
        i += 1
    return tuple(coeffs)


def finite_orbit_brute(finite_cartan, f) -> set:
    """Closure of a finite weight under all simple reflections."""
    n = len(f)
    cols = [tuple(finite_cartan[j][i] for j in range(n)) for i in range(n)]
    seen = {tuple(f)}
    stack = [tuple(f)]
    while stack:
        w = stack.pop()
        for i in range(n):
            child = tuple(x - w[i] * c for x, c in zip(w, cols[i]))
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return seen


def finite_length_census(finite_cartan, rank: int) -> list[int]:
    """Number of finite Weyl group elements per length, by graph distance on
    the (regular, hence faithful) orbit of the finite Weyl vector."""
    rho = tuple([1] * rank)
    n = rank
    cols = [tuple(finite_cartan[j][i] for j in range(n)) for i in range(n)]
    dist = {rho: 0}
    queue = deque([rho])
    while queue:
        w = queue.popleft()
        for i in range(n):
            child = tuple(x - w[i] * c for x, c in zip(w, cols[i]))
            if child not in dist:
                dist[child] = dist[w] + 1
                queue.append(child)
    out = [0] * (max(dist.values()) + 1)
    for d in dist.values():
        out[d] += 1
    return out


def affine_length_census(id: AlgebraId, max_length: int) -> list[int]:
    """Number of affine Weyl group elements per length up to max_length, by
    graph distance on the orbit of the affine Weyl vector."""
    cartan = affine_cartan(id).cartan
    n = len(cartan)
    cols = [tuple(cartan[j][i] for j in range(n)) for i in range(n)]
    root = weyl_vector(id).labels
    dist = {root: 0}
    frontier = [root]
    counts = [1]
    for length in range(1, max_length + 1):
        new = []
        for w in frontier:
            for i in range(n):
                child = tuple(x - w[i] * c for x, c in zip(w, cols[i]))
                if child not in dist:
                    dist[child] = length
                    new.append(child)
        counts.append(len(new))
        frontier = new
    return counts
