"""Exact truncated power series over the integers, and the q-series the
affine tables produce: Euler products, eta-quotients, the simply-laced
closed product, and the classical / Bott Poincare polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraId,
    DataError,
    EtaQuotientSpec,
    affine_cartan,
    finite_degrees,
    finite_exponents,
    horizontal,
    weyl_order_of_finite_type,
)


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class QSeries:
    """Power series truncated at q^truncation, integer coefficients."""

    truncation: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.truncation + 1:
            raise SeriesError("coefficient vector length must be truncation + 1")

    def __getitem__(self, m: int) -> int:
        return self.coeffs[m]

    def truncate(self, t: int) -> "QSeries":
        if t >= self.truncation:
            return self
        return QSeries(t, self.coeffs[: t + 1])

    def __add__(self, other: "QSeries") -> "QSeries":
        t = min(self.truncation, other.truncation)
        return QSeries(t, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        t = min(self.truncation, other.truncation)
        return QSeries(t, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.truncation, tuple(c * other for c in self.coeffs))
        t = min(self.truncation, other.truncation)
        out = [0] * (t + 1)
        for i, a in enumerate(self.coeffs[: t + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: t + 1 - i]):
                if b:
                    out[i + j] += a * b
        return QSeries(t, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = one(self.truncation)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inverse(self) -> "QSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SeriesError(f"series with constant term {c0} has no integer inverse")
        t = self.truncation
        inv = [c0] + [0] * t
        for m in range(1, t + 1):
            acc = sum(self.coeffs[j] * inv[m - j] for j in range(1, m + 1))
            inv[m] = -c0 * acc
        return QSeries(t, tuple(inv))

    def shift(self, n: int) -> "QSeries":
        """Multiply by q^n (n >= 0)."""
        if n < 0:
            raise SeriesError("negative shift")
        return QSeries(self.truncation, ((0,) * n + self.coeffs)[: self.truncation + 1])


def one(t: int) -> QSeries:
    return QSeries(t, (1,) + (0,) * t)


def constant(value: int, t: int) -> QSeries:
    return QSeries(t, (value,) + (0,) * t)


def binomial_factor(exponent: int, power: int, t: int) -> QSeries:
    """(1 + q^exponent)^power as a truncated series (power may be negative)."""
    base = QSeries(t, tuple(1 if m in (0, exponent) else 0 for m in range(t + 1)))
    return base**power


# ---------------------------------------------------------------------------
# Euler products and eta-quotients
# ---------------------------------------------------------------------------

def euler_series(s: int, t: int) -> QSeries:
    """Product over i >= 1 of (1 - q^(s*i)), via the pentagonal-number
    expansion: only exponents s*j(3j-1)/2 contribute."""
    if s < 1:
        raise SeriesError("euler argument must be >= 1")
    out = [0] * (t + 1)
    out[0] = 1
    j = 1
    while True:
        e1 = s * j * (3 * j - 1) // 2
        e2 = s * j * (3 * j + 1) // 2
        if e1 > t:
            break
        sign = -1 if j % 2 else 1
        out[e1] += sign
        if e2 <= t:
            out[e2] += sign
        j += 1
    return QSeries(t, tuple(out))


def eta_quotient_series(spec: EtaQuotientSpec, t: int) -> QSeries:
    """Expansion of multiplier * q^(shift) * prod_i phi(q^{s_i})^{r_i} where
    shift = (phase + sum r_i s_i) / 24."""
    num = spec.shift_numerator
    if num % 24 != 0:
        raise DataError(f"phase congruence violated: {num} not divisible by 24")
    shift = num // 24
    if shift < 0:
        raise DataError(f"negative power-of-q shift {shift}")
    series = one(t)
    for s, r in spec.factors:
        series = series * euler_series(s, t) ** r
    return (series * spec.multiplier).shift(shift)


# ---------------------------------------------------------------------------
# Simply-laced closed product
# ---------------------------------------------------------------------------

def _sparse_factor(exponent: int, t: int, sign: int = -1) -> QSeries:
    return QSeries(
        t, tuple(1 if m == 0 else (sign if m == exponent else 0) for m in range(t + 1))
    )


def r_factor(id: AlgebraId, t: int) -> QSeries:
    """The doubly-infinite product part of the closed form: over k, s >= 0,
    (1 + q^(2^s (2k+1) hv))^((s+1) N), truncated by omitting factors whose
    lowest term exceeds the truncation."""
    hor = horizontal(id)
    hv = affine_cartan(id).dual_coxeter
    n = hor.rank
    series = one(t)
    s = 0
    while (1 << s) * hv <= t:
        k = 0
        while (1 << s) * (2 * k + 1) * hv <= t:
            series = series * binomial_factor((1 << s) * (2 * k + 1) * hv, (s + 1) * n, t)
            k += 1
        s += 1
    return series


def p_factor(id: AlgebraId, t: int, convention: str = "exponents") -> QSeries:
    """Product over i and k >= 0 of (1 - q^(h k + d_i)); d_i are the
    exponents by default (the degrees variant is kept for documentation)."""
    hor = horizontal(id)
    h = affine_cartan(id).coxeter
    if convention == "exponents":
        ds = hor.exponents
    elif convention == "degrees":
        ds = hor.degrees
    else:
        raise ValueError(f"unknown convention {convention!r}")
    series = one(t)
    for d in ds:
        k = 0
        while h * k + d <= t:
            series = series * _sparse_factor(h * k + d, t)
            k += 1
    return series


def simply_laced_product(id: AlgebraId, t: int, convention: str = "exponents") -> QSeries:
    if id.twist != 1 or id.family not in ("A", "D", "E"):
        raise SeriesError(f"{id} is not simply-laced non-twisted")
    w = horizontal(id).weyl_order
    return w * (p_factor(id, t, convention) * r_factor(id, t)).inverse()


# ---------------------------------------------------------------------------
# Poincare polynomials (length grading)
# ---------------------------------------------------------------------------

def finite_poincare(family: str, rank: int, t: int) -> QSeries:
    """prod_i (1 - t^{d_i}) / (1 - t)^rank over the degrees: the length
    generating polynomial of the finite Weyl group."""
    series = one(t)
    for d in finite_degrees(family, rank):
        # (1 - t^d)/(1 - t) = 1 + t + ... + t^(d-1)
        series = series * QSeries(
            t, tuple(1 if m < d else 0 for m in range(t + 1))
        )
    return series


class BottConventionError(ValueError):
    """The chosen reading of the exponent symbols produces 1/(1-t^0)."""


def bott_affine_poincare(id: AlgebraId, t: int, convention: str = "degrees") -> QSeries:
    """Length generating series of the affine Weyl group: the finite
    polynomial times prod_i 1/(1 - t^{e_i}).

    convention="degrees" shifts each denominator degree down by one, so
    the denominators carry the exponents; convention="exponents" would put
    the exponents themselves in the denominators, which is singular
    (exponent 1 is always present) and is kept only as a negative control.
    """
    if id.twist != 1:
        raise SeriesError(f"Bott series requires a non-twisted algebra, got {id}")
    hor = horizontal(id)
    if convention == "degrees":
        es = hor.exponents
    elif convention == "exponents":
        es = tuple(m - 1 for m in hor.exponents)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    if any(e == 0 for e in es):
        raise BottConventionError(
            f"convention {convention!r} yields a factor 1/(1-t^0) for {id}"
        )
    series = finite_poincare(hor.family, hor.rank, t)
    for e in es:
        series = series * _sparse_factor(e, t).inverse()
    return series
