"""Affine weight arithmetic in Dynkin-label coordinates.

A weight is stored as its labels (a_0, ..., a_N) together with an explicit
depth counter.  Reflections subtract a_i times column i of the affine Cartan
matrix; reflecting at the affine node changes the depth by the node-0 label.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraId, affine_cartan, horizontal

FiniteWeight = tuple[int, ...]


class NonTerminationError(RuntimeError):
    """Straightening exceeded its step bound (invalid input data)."""


@dataclass(frozen=True)
class AffineWeight:
    labels: tuple[int, ...]
    depth: int = 0

    @property
    def finite(self) -> FiniteWeight:
        return self.labels[1:]


@dataclass(frozen=True)
class StraightenResult:
    dominant: AffineWeight
    word: tuple[int, ...]  # reflection indices in application order
    steps: int


def weyl_vector(id: AlgebraId) -> AffineWeight:
    n = affine_cartan(id).n_nodes
    return AffineWeight(labels=(1,) * n, depth=0)


def reflect(id: AlgebraId, w: AffineWeight, i: int) -> AffineWeight:
    cartan = affine_cartan(id).cartan
    a = w.labels[i]
    labels = tuple(x - a * row[i] for x, row in zip(w.labels, cartan))
    return AffineWeight(labels=labels, depth=w.depth + (a if i == 0 else 0))


def level(id: AlgebraId, w: AffineWeight) -> int:
    comarks = affine_cartan(id).comarks
    return sum(c * a for c, a in zip(comarks, w.labels))


def finite_norm(id: AlgebraId, f: FiniteWeight) -> Fraction:
    """Squared length of a horizontal weight under the invariant form."""
    gram = horizontal(id).gram
    return sum(f[i] * gram[i][j] * f[j] for i in range(len(f)) for j in range(len(f)))


def depth_from_norm(id: AlgebraId, f: FiniteWeight) -> int | None:
    """Depth that a finite weight would have inside the orbit of the Weyl
    vector, or None when the norm relation has no nonnegative integer
    solution (the weight cannot occur)."""
    hor = horizontal(id)
    k = affine_cartan(id).dual_coxeter
    m = (finite_norm(id, f) - hor.rho_norm) / (2 * k)
    if m.denominator != 1 or m < 0:
        return None
    return int(m)


def straighten(id: AlgebraId, w: AffineWeight, max_steps: int = 10**6) -> StraightenResult:
    """Reflect at the smallest negative label until dominant.

    Terminates for positive level; the recorded word replayed on the input
    reproduces the dominant representative.
    """
    cartan = affine_cartan(id).cartan
    n = len(cartan)
    labels = list(w.labels)
    depth = w.depth
    word: list[int] = []
    steps = 0
    while True:
        i = next((j for j in range(n) if labels[j] < 0), None)
        if i is None:
            break
        steps += 1
        if steps > max_steps:
            raise NonTerminationError(
                f"straightening exceeded {max_steps} steps for {id}"
            )
        a = labels[i]
        for j in range(n):
            labels[j] -= a * cartan[j][i]
        if i == 0:
            depth += a
        word.append(i)
    return StraightenResult(
        dominant=AffineWeight(labels=tuple(labels), depth=depth),
        word=tuple(word),
        steps=steps,
    )


def apply_word(id: AlgebraId, w: AffineWeight, word) -> AffineWeight:
    for i in word:
        w = reflect(id, w, i)
    return w


# ---------------------------------------------------------------------------
# Finite orbit sizes via parabolic stabilizers
# ---------------------------------------------------------------------------

def _components(nodes: list[int], cartan) -> list[list[int]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = [seed]
        stack = [seed]
        while stack:
            i = stack.pop()
            for j in list(remaining):
                if cartan[i][j] != 0:
                    remaining.discard(j)
                    comp.append(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _chain_order(nodes: list[int], cartan) -> list[int]:
    """Order the nodes of a path subdiagram end to end."""
    adj = {i: [j for j in nodes if j != i and cartan[i][j] != 0] for i in nodes}
    ends = [i for i in nodes if len(adj[i]) <= 1]
    chain = [ends[0]]
    while len(chain) < len(nodes):
        nxt = [j for j in adj[chain[-1]] if j not in chain]
        chain.append(nxt[0])
    return chain


def _component_weyl_order(nodes: list[int], cartan) -> int:
    n = len(nodes)
    if n == 1:
        return 2
    mult = {
        (i, j): cartan[i][j] * cartan[j][i]
        for i in nodes
        for j in nodes
        if i < j and cartan[i][j] != 0
    }
    if any(m == 3 for m in mult.values()):
        return 12  # G2
    if any(m == 2 for m in mult.values()):
        # a chain with one double bond: F4 iff the double bond is central
        if n == 4:
            chain = _chain_order(nodes, cartan)
            mid = tuple(sorted(chain[1:3]))
            if mult.get(mid, 1) == 2:
                return 1152
        return 2**n * math.factorial(n)  # B/C
    degrees = {i: sum(1 for j in nodes if j != i and cartan[i][j] != 0) for i in nodes}
    branch_node = next((i for i in nodes if degrees[i] == 3), None)
    if branch_node is None:
        return math.factorial(n + 1)  # A_n
    # branch lengths from the trivalent node
    lengths = []
    for j in nodes:
        if j != branch_node and cartan[branch_node][j] != 0:
            ln, prev, cur = 1, branch_node, j
            while True:
                nxt = [k for k in nodes if k not in (prev, cur) and cartan[cur][k] != 0]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                ln += 1
            lengths.append(ln)
    shape = tuple(sorted(lengths))
    if shape[:2] == (1, 1):
        return 2 ** (n - 1) * math.factorial(n)  # D_n
    return {(1, 2, 2): 51840, (1, 2, 3): 2903040, (1, 2, 4): 696729600}[shape]


def finite_orbit_size(id: AlgebraId, f: FiniteWeight) -> int:
    """Size of the horizontal Weyl orbit of a dominant finite weight."""
    if any(x < 0 for x in f):
        raise ValueError(f"finite weight {f} is not dominant")
    hor = horizontal(id)
    zero_nodes = [i for i, x in enumerate(f) if x == 0]
    stab = 1
    for comp in _components(zero_nodes, hor.finite_cartan):
        stab *= _component_weyl_order(comp, hor.finite_cartan)
    return hor.weyl_order // stab
