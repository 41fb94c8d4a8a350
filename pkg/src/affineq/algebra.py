"""Static Cartan-level data for the affine Kac-Moody families.

Everything here is exact: Cartan matrices are integer matrices, marks and
comarks are computed as primitive kernel vectors, the symmetrizer and the
Gram matrix of fundamental weights are Fractions.  Node 0 is always the
affine node; deleting it leaves the horizontal finite algebra.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction


class ConstructionError(ValueError):
    """Unknown or invalid (family, rank, twist) combination."""


class DataError(ValueError):
    """A table row instantiated to an invalid eta-quotient."""


# ---------------------------------------------------------------------------
# Algebra identifiers
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"^([A-Ga-g])(\d+)~([123])$")


def _valid_combination(family: str, rank: int, twist: int) -> bool:
    if twist == 1:
        return (
            (family == "A" and rank >= 1)
            or (family == "B" and rank >= 3)
            or (family == "C" and rank >= 2)
            or (family == "D" and rank >= 4)
            or (family == "E" and rank in (6, 7, 8))
            or (family == "F" and rank == 4)
            or (family == "G" and rank == 2)
        )
    if twist == 2:
        # A2~2, A_{2N}^(2) N>=2, A_{2N-1}^(2) N>=3, D_{N+1}^(2) N>=2, E6~2
        if family == "A":
            return rank == 2 or (rank >= 4 and rank % 2 == 0) or (rank >= 5 and rank % 2 == 1)
        if family == "D":
            return rank >= 3
        return family == "E" and rank == 6
    if twist == 3:
        return family == "D" and rank == 4
    return False


@dataclass(frozen=True, order=True)
class AlgebraId:
    family: str
    rank: int
    twist: int = 1

    def __post_init__(self):
        if not _valid_combination(self.family, self.rank, self.twist):
            raise ConstructionError(
                f"no affine algebra {self.family}{self.rank}~{self.twist} "
                f"in tables Aff 1 / Aff 2"
            )

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}~{self.twist}"

    def __str__(self) -> str:
        return self.name


def parse_algebra(text: str) -> AlgebraId:
    """Parse the naming grammar ``<family><rank>~<twist>``, e.g. ``E6~1``."""
    m = _NAME_RE.match(text.strip())
    if not m:
        raise ConstructionError(f"cannot parse algebra name {text!r}")
    return AlgebraId(m.group(1).upper(), int(m.group(2)), int(m.group(3)))


# ---------------------------------------------------------------------------
# Exact linear algebra helpers (small matrices, Fractions)
# ---------------------------------------------------------------------------

def _primitive_kernel(matrix: list[list[int]]) -> tuple[int, ...]:
    """Primitive positive integer vector spanning the 1-dim right kernel."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    pivots = {}
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ConstructionError(f"matrix kernel is {len(free)}-dimensional, expected 1")
    fc = free[0]
    vec = [Fraction(0)] * n
    vec[fc] = Fraction(1)
    for c, row_idx in pivots.items():
        vec[c] = -rows[row_idx][fc]
    denom = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * denom) for x in vec]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise ConstructionError("kernel vector is not positive")
    return tuple(ints)


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        pivot = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = aug[c][c]
        aug[c] = [x / inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# Affine Cartan matrices (Kac tables Aff 1 / Aff 2, node 0 affine)
# ---------------------------------------------------------------------------

def _base_matrix(n: int) -> list[list[int]]:
    return [[2 if i == j else 0 for j in range(n)] for i in range(n)]


def _bond(a, i, j, down=-1, up=-1):
    a[i][j] = down
    a[j][i] = up


def _cartan_matrix(id: AlgebraId) -> list[list[int]]:
    f, n, t = id.family, id.rank, id.twist
    if t == 1:
        if f == "A":
            if n == 1:
                return [[2, -2], [-2, 2]]
            a = _base_matrix(n + 1)
            for i in range(n):
                _bond(a, i, i + 1)
            _bond(a, 0, n)
            return a
        if f == "B":
            a = _base_matrix(n + 1)
            for i in range(1, n):
                _bond(a, i, i + 1)
            a[n - 1][n], a[n][n - 1] = -1, -2  # alpha_n short
            _bond(a, 0, 2)
            return a
        if f == "C":
            a = _base_matrix(n + 1)
            for i in range(n):
                _bond(a, i, i + 1)
            a[0][1], a[1][0] = -1, -2          # alpha_0 long
            a[n - 1][n], a[n][n - 1] = -2, -1  # alpha_n long
            return a
        if f == "D":
            a = _base_matrix(n + 1)
            for i in range(1, n - 1):
                _bond(a, i, i + 1)
            _bond(a, n - 2, n)
            _bond(a, 0, 2)
            return a
        if f == "E":
            edges = {
                6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (0, 2)],
                7: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4), (0, 1)],
                8: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4), (0, 8)],
            }[n]
            a = _base_matrix(n + 1)
            for i, j in edges:
                _bond(a, i, j)
            return a
        if f == "F":
            a = _base_matrix(5)
            _bond(a, 0, 1)
            _bond(a, 1, 2)
            a[2][3], a[3][2] = -1, -2
            _bond(a, 3, 4)
            return a
        if f == "G":
            a = _base_matrix(3)
            _bond(a, 0, 1)
            a[1][2], a[2][1] = -1, -3
            return a
    if t == 2:
        if f == "A" and n == 2:
            return [[2, -4], [-1, 2]]
        if f == "A" and n % 2 == 0:      # A_{2l}^(2), l = n/2 >= 2
            l = n // 2
            a = _base_matrix(l + 1)
            for i in range(l):
                _bond(a, i, i + 1)
            a[0][1], a[1][0] = -2, -1
            a[l - 1][l], a[l][l - 1] = -2, -1
            return a
        if f == "A":                      # A_{2l-1}^(2), l = (n+1)/2 >= 3
            l = (n + 1) // 2
            a = _base_matrix(l + 1)
            _bond(a, 0, 2)
            _bond(a, 1, 2)
            for i in range(2, l):
                _bond(a, i, i + 1)
            a[l - 1][l], a[l][l - 1] = -2, -1
            return a
        if f == "D":                      # D_{l+1}^(2), l = n - 1 >= 2
            l = n - 1
            a = _base_matrix(l + 1)
            for i in range(l):
                _bond(a, i, i + 1)
            a[0][1], a[1][0] = -2, -1
            a[l - 1][l], a[l][l - 1] = -1, -2
            return a
        if f == "E":                      # E6~2, dual of F4~1
            a = _base_matrix(5)
            _bond(a, 0, 1)
            _bond(a, 1, 2)
            a[2][3], a[3][2] = -2, -1
            _bond(a, 3, 4)
            return a
    if t == 3:                            # D4~3, dual of G2~1
        a = _base_matrix(3)
        _bond(a, 0, 1)
        a[1][2], a[2][1] = -3, -1
        return a
    raise ConstructionError(f"unhandled algebra {id}")


def _symmetrizer(cartan: list[list[int]]) -> tuple[Fraction, ...]:
    """Rational d with diag(d).A symmetric, normalized to d_0 = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    if any(x is None for x in d):
        raise ConstructionError("Dynkin diagram is not connected")
    return tuple(d)  # type: ignore[arg-type]


@dataclass(frozen=True)
class AffineCartanData:
    cartan: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    symmetrizer: tuple[Fraction, ...]
    coxeter: int
    dual_coxeter: int

    @property
    def n_nodes(self) -> int:
        return len(self.marks)


@functools.cache
def affine_cartan(id: AlgebraId) -> AffineCartanData:
    a = _cartan_matrix(id)
    marks = _primitive_kernel(a)
    comarks = _primitive_kernel([list(col) for col in zip(*a)])
    return AffineCartanData(
        cartan=tuple(tuple(row) for row in a),
        marks=marks,
        comarks=comarks,
        symmetrizer=_symmetrizer(a),
        coxeter=sum(marks),
        dual_coxeter=sum(comarks),
    )


# ---------------------------------------------------------------------------
# Finite types: exponents, degrees, Weyl orders
# ---------------------------------------------------------------------------

def finite_exponents(family: str, rank: int) -> tuple[int, ...]:
    if family == "A" and rank >= 1:
        return tuple(range(1, rank + 1))
    if family in ("B", "C") and rank >= 2:
        return tuple(range(1, 2 * rank, 2))
    if family == "D" and rank >= 3:
        return tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    if family == "E" and rank == 6:
        return (1, 4, 5, 7, 8, 11)
    if family == "E" and rank == 7:
        return (1, 5, 7, 9, 11, 13, 17)
    if family == "E" and rank == 8:
        return (1, 7, 11, 13, 17, 19, 23, 29)
    if family == "F" and rank == 4:
        return (1, 5, 7, 11)
    if family == "G" and rank == 2:
        return (1, 5)
    raise ConstructionError(f"no finite type {family}{rank}")


def finite_degrees(family: str, rank: int) -> tuple[int, ...]:
    return tuple(m + 1 for m in finite_exponents(family, rank))


def weyl_order_of_finite_type(family: str, rank: int) -> int:
    return math.prod(finite_degrees(family, rank))


def finite_coxeter(family: str, rank: int) -> int:
    return max(finite_exponents(family, rank)) + 1


def finite_dual_coxeter(family: str, rank: int) -> int:
    values = {"A": rank + 1, "B": 2 * rank - 1, "C": rank + 1, "D": 2 * rank - 2}
    if family in values:
        finite_exponents(family, rank)  # rank validation
        return values[family]
    return {("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 9, ("G", 2): 4}[
        (family, rank)
    ]


_HORIZONTAL_TYPE = {
    # family, twist -> function of affine rank n
    ("A", 1): lambda n: ("A", n),
    ("B", 1): lambda n: ("B", n),
    ("C", 1): lambda n: ("C", n),
    ("D", 1): lambda n: ("D", n),
    ("E", 1): lambda n: ("E", n),
    ("F", 1): lambda n: ("F", n),
    ("G", 1): lambda n: ("G", n),
    ("A", 2): lambda n: ("A", 1) if n == 2 else ("C", n // 2 if n % 2 == 0 else (n + 1) // 2),
    ("D", 2): lambda n: ("B", n - 1),
    ("E", 2): lambda n: ("F", 4),
    ("D", 3): lambda n: ("G", 2),
}


def horizontal_type(id: AlgebraId) -> tuple[str, int]:
    """Finite type obtained by deleting node 0 of the Kac diagram."""
    return _HORIZONTAL_TYPE[(id.family, id.twist)](id.rank)


@dataclass(frozen=True)
class HorizontalData:
    family: str
    rank: int
    finite_cartan: tuple[tuple[int, ...], ...]
    exponents: tuple[int, ...]
    degrees: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    rho_norm: Fraction
    weyl_order: int


@functools.cache
def horizontal(id: AlgebraId) -> HorizontalData:
    data = affine_cartan(id)
    n = data.n_nodes - 1
    fin = [[data.cartan[i][j] for j in range(1, n + 1)] for i in range(1, n + 1)]
    d = data.symmetrizer[1:]
    # Gram of fundamental weights: solves A^T G = diag(d)
    a_t_inv = _invert([[Fraction(fin[j][i]) for j in range(n)] for i in range(n)])
    gram = tuple(
        tuple(a_t_inv[i][j] * d[j] for j in range(n)) for i in range(n)
    )
    fam, rank = horizontal_type(id)
    if rank != n:
        raise ConstructionError(f"horizontal rank mismatch for {id}")
    return HorizontalData(
        family=fam,
        rank=rank,
        finite_cartan=tuple(tuple(row) for row in fin),
        exponents=finite_exponents(fam, rank),
        degrees=finite_degrees(fam, rank),
        gram=gram,
        rho_norm=sum(x for row in gram for x in row),
        weyl_order=weyl_order_of_finite_type(fam, rank),
    )


# ---------------------------------------------------------------------------
# Eta-quotient table rows
# ---------------------------------------------------------------------------

HVEE_INTERPRETATIONS = ("affine", "horizontal-dual", "horizontal")


def hvee_value(id: AlgebraId, interp: str = "affine") -> int:
    """Value substituted for the h-vee symbol in a twisted table row."""
    if interp == "affine":
        return affine_cartan(id).dual_coxeter
    fam, rank = horizontal_type(id)
    if interp == "horizontal-dual":
        return finite_dual_coxeter(fam, rank)
    if interp == "horizontal":
        return finite_coxeter(fam, rank)
    raise ValueError(f"unknown h-vee interpretation {interp!r}")


@dataclass(frozen=True)
class EtaQuotientSpec:
    factors: tuple[tuple[int, int], ...]  # (argument s, exponent r)
    phase: int
    multiplier: int

    @property
    def shift_numerator(self) -> int:
        return self.phase + sum(s * r for s, r in self.factors)


def make_eta_spec(raw_factors, phase: int, multiplier: int) -> EtaQuotientSpec:
    merged: dict[int, int] = {}
    for s, r in raw_factors:
        if s <= 0:
            raise DataError(f"eta argument {s} <= 0 (wrong h-vee interpretation?)")
        merged[s] = merged.get(s, 0) + r
    factors = tuple(sorted(((s, r) for s, r in merged.items() if r != 0), reverse=True))
    return EtaQuotientSpec(factors=factors, phase=phase, multiplier=multiplier)


def eta_table_entry(id: AlgebraId, hvee_interp: str = "affine") -> EtaQuotientSpec:
    f, n, t = id.family, id.rank, id.twist
    w = horizontal(id).weyl_order
    if t == 1:
        hv = affine_cartan(id).dual_coxeter
        if f == "A":
            return make_eta_spec([(hv, n + 1), (1, -1)], -(n + 1) * hv + 1, w)
        if f == "B":
            return make_eta_spec(
                [(2 * hv, 1), (hv, n - 1), (2, 1), (1, -1)], -(n + 1) * hv - 1, w
            )
        if f == "C":
            # -(2n-1)hv - 1 is the unique phase cancelling the fractional
            # prefactor for this factor list
            return make_eta_spec(
                [(2 * hv, n - 1), (hv, 1), (2, 1), (1, -1)], -(2 * n - 1) * hv - 1, w
            )
        if f == "D":
            phase = -(2 * n + 1) * hv // 2 - 1
            return make_eta_spec(
                [(hv, n + 1), (hv // 2, -1), (2, 1), (1, -1)], phase, w
            )
        if f == "G":
            return make_eta_spec(
                [(12, 1), (6, -1), (4, 1), (3, 1), (2, 1), (1, -1)], -14, w
            )
        if f == "F":
            return make_eta_spec(
                [(18, 2), (9, 2), (6, -1), (3, 1), (2, 1), (1, -1)], -52, w
            )
        if f == "E" and n == 6:
            return make_eta_spec(
                [(12, 7), (6, -1), (4, -1), (3, 1), (2, 1), (1, -1)], -78, w
            )
        if f == "E" and n == 7:
            return make_eta_spec(
                [(18, 8), (9, -1), (6, -1), (3, 1), (2, 1), (1, -1)], -133, w
            )
        if f == "E" and n == 8:
            return make_eta_spec(
                [(30, 9), (15, -1), (10, -1), (6, -1), (5, 1), (3, 1), (2, 1), (1, -1)],
                -248,
                w,
            )
    if t == 2:
        if f == "A" and n == 2:
            return make_eta_spec(
                [(12, 1), (6, -1), (4, -1), (3, 1), (2, 2), (1, -1)], -8, w
            )
        hv = hvee_value(id, hvee_interp)
        if f == "A" and n % 2 == 0:  # A_{2N}^(2), N = n/2
            N = n // 2
            return make_eta_spec(
                [(4 * hv, 1), (2 * hv, N - 2), (hv, 1), (4, -1), (2, 2), (1, -1)],
                -(2 * N + 1) * hv + 1,
                w,
            )
        if f == "A":  # A_{2N-1}^(2), N = (n+1)/2
            N = (n + 1) // 2
            return make_eta_spec(
                [(2 * hv, 2), (hv, N - 3), (N, 1), (2, 1), (1, -1)],
                -(N + 1) * hv - (N + 1),
                w,
            )
        if f == "D":  # D_{N+1}^(2), N = n - 1
            N = n - 1
            return make_eta_spec(
                [(2 * hv, N), (4, -1), (2, 2), (1, -1)], -2 * N * hv + 1, w
            )
        if f == "E":
            return make_eta_spec(
                [(12, 1), (8, -1), (6, -1), (4, 1), (3, 1), (2, 1), (1, -1)], -6, w
            )
    if t == 3:
        return make_eta_spec(
            [(18, 2), (9, -1), (6, -1), (3, 2), (2, 1), (1, -1)], -28, w
        )
    raise ConstructionError(f"no table row for {id}")


def uses_hvee_symbol(id: AlgebraId) -> bool:
    """True for the Table-2 rows whose g is written in terms of h-vee."""
    if id.twist != 2:
        return False
    if id.family == "A" and id.rank == 2:
        return False
    return id.family in ("A", "D")


# ---------------------------------------------------------------------------
# Enumeration of supported algebras
# ---------------------------------------------------------------------------

def supported_algebras(max_rank: int, twist: int | None = None) -> list[AlgebraId]:
    """Every supported id with rank <= max_rank; exceptional types at their
    fixed ranks are included whenever max_rank allows them."""
    out: list[AlgebraId] = []
    for fam, lo in (("A", 1), ("B", 3), ("C", 2), ("D", 4)):
        for r in range(lo, max_rank + 1):
            out.append(AlgebraId(fam, r, 1))
    for fam, r in (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)):
        if r <= max_rank:
            out.append(AlgebraId(fam, r, 1))
    for r in range(2, max_rank + 1):
        if r != 3:
            out.append(AlgebraId("A", r, 2))
    for r in range(3, max_rank + 1):
        out.append(AlgebraId("D", r, 2))
    if 6 <= max_rank:
        out.append(AlgebraId("E", 6, 2))
    if 4 <= max_rank:
        out.append(AlgebraId("D", 4, 3))
    out.sort(key=lambda a: (a.twist, a.family, a.rank))
    return out
