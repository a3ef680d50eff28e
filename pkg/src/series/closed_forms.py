"""
Closed-form binomial expressions, all in exact arithmetic.

Counting k_t-Dyck paths reduces to the coefficients of y^j, where
y = 1 + x*y^(k+1), and to the determinant polynomials D_m of the banded strip
system. The k = 1 limiting law of the first-arrival parameter lives here too.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.exceptions import InconsistencyError, InvalidParameterError
from .exact_series import Series, reciprocal

logger = logging.getLogger(__name__)


def _check_k(k: int) -> None:
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")


def binom(a: int, b: int) -> int:
    if a < 0:
        raise InvalidParameterError(f"binom: negative upper index {a} is not supported")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def ycoeff(k: int, j: int, n: int) -> int:
    """
    [x^n] y^j = j/((k+1)n + j) * C((k+1)n + j, n)
    """
    _check_k(k)
    if j < 1 or n < 0:
        raise InvalidParameterError(f"ycoeff needs j >= 1 and n >= 0, got j={j}, n={n}")
    top = (k + 1) * n + j
    quotient, remainder = divmod(j * comb(top, n), top)
    if remainder:
        raise InconsistencyError(f"[x^{n}]y^{j} for k={k} is not an integer")
    return quotient


def y_power_series(k: int, j: int, order: int) -> Series:
    """y^j to the given order, straight from the coefficient formula."""
    if j == 0:
        return Series.one(order)
    return Series([ycoeff(k, j, n) for n in range(order + 1)], order)


def count_simple(k: int, t: int, n: int) -> int:
    _check_k(k)
    if not 0 <= t <= k:
        raise InvalidParameterError(f"count_simple requires 0 <= t <= k (t={t}, k={k}); use count_general")
    return ycoeff(k, t + 1, n)


class DPoly(BaseModel):
    """D_m as a coefficient list in x; trailing zero coefficients are dropped."""

    model_config = ConfigDict(frozen=True)

    k: int
    m: int
    coeffs: Tuple[int, ...]

    @model_validator(mode="after")
    def _unit_constant(self) -> "DPoly":
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("D_m must have constant term 1")
        return self

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: Fraction) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def to_series(self, order: int) -> Series:
        return Series(self.coeffs, order)


def _strip_zeros(coeffs: List[int]) -> Tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _d_by_sum(k: int, m: int) -> Tuple[int, ...]:
    return _strip_zeros([(-1) ** ell * binom(m - k * ell, ell) for ell in range(m // k + 1)])


@lru_cache(maxsize=32)
def _d_table(k: int, m: int) -> Tuple[Tuple[int, ...], ...]:
    # D_j = D_(j-1) - x D_(j-k-1), D_0 = ... = D_k = 1
    table: List[List[int]] = [[1] for _ in range(min(m, k) + 1)]
    for j in range(k + 1, m + 1):
        prev, back = table[j - 1], table[j - k - 1]
        size = max(len(prev), len(back) + 1)
        poly = prev + [0] * (size - len(prev))
        for ell, c in enumerate(back):
            poly[ell + 1] -= c
        table.append(list(_strip_zeros(poly)))
    return tuple(tuple(p) for p in table)


@lru_cache(maxsize=512)
def d_poly(k: int, m: int) -> DPoly:
    """
    D_m from the explicit binomial sum, cross-checked against the recursion.
    """
    if k < 1 or m < 0:
        raise InvalidParameterError(f"d_poly needs k >= 1 and m >= 0, got k={k}, m={m}")
    by_sum = _d_by_sum(k, m)
    by_recursion = _d_table(k, m)[m]
    if by_sum != by_recursion:
        raise InconsistencyError(f"D_{m} (k={k}): sum {by_sum} != recursion {by_recursion}")
    logger.debug("D_%d for k=%d: %s", m, k, by_sum)
    return DPoly(k=k, m=m, coeffs=by_sum)


def d_poly_series(k: int, m: int, order: int) -> Series:
    return d_poly(k, m).to_series(order)


def count_general(k: int, t: int, n: int) -> int:
    """
    Number of k_t-Dyck paths of length (k+1)n, i.e. [x^n] D_t y^(t+1).
    """
    _check_k(k)
    if t < 0 or n < 0:
        raise InvalidParameterError(f"count_general needs t, n >= 0, got t={t}, n={n}")
    total = 0
    for ell in range(min(t // k, n) + 1):
        c = binom(t - k * ell, ell)
        if c:
            total += (-1) ** ell * c * ycoeff(k, t + 1, n - ell)
    return total


def f_part_counts(k: int, t: int, order: int) -> List[int]:
    """
    Coefficients of 1/D_t: entry l counts the F-parts of length t + (k+1)l.
    """
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")
    return list(reciprocal(d_poly_series(k, t, order)).coeffs)


def rho(k: int) -> Fraction:
    _check_k(k)
    return Fraction(k**k, (k + 1) ** (k + 1))


class RatioReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int
    t: int
    quotients: Tuple[Tuple[int, Fraction], ...]
    limit: Fraction
    limit_float: float

    @model_validator(mode="after")
    def _simple_case(self) -> "RatioReport":
        if self.t <= self.k and self.limit != 1:
            raise ValueError("the ratio limit must be 1 when t <= k")
        return self

    @property
    def final(self) -> Tuple[int, Fraction]:
        return self.quotients[-1]


def ratio_limit(k: int, t: int) -> Fraction:
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")
    r = rho(k)
    return sum((binom(t - k * ell, ell) * (-r) ** ell for ell in range(t // k + 1)), Fraction(0))


def ratio_report(k: int, t: int, n_max: int) -> RatioReport:
    """
    count_general(k, t, n) / [x^n] y^(t+1) for n = 0..n_max, with the n -> oo limit.
    """
    if t < 0 or n_max < 0:
        raise InvalidParameterError("t and n_max must be non-negative")
    quotients = tuple(
        (n, Fraction(count_general(k, t, n), ycoeff(k, t + 1, n))) for n in range(n_max + 1)
    )
    limit = ratio_limit(k, t)
    return RatioReport(k=k, t=t, quotients=quotients, limit=limit, limit_float=float(limit))


def mean_j(t: int) -> Fraction:
    """Asymptotic mean of J for k = 1: t(t+2)/3."""
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")
    return Fraction(t * (t + 2), 3)


def mean_half_excess(t: int) -> Fraction:
    """Asymptotic mean of (J - t)/2 for k = 1."""
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")
    return Fraction(t * (t - 1), 6)


def limit_dist_mass(t: int, m: int) -> Fraction:
    """
    Limiting probability that (J - t)/2 = m, for k = 1.

    (t+1)/2^t * 4^-m * sum over lambda of
    C(a, m - lambda(t+1)) - 2 C(a, m-1 - lambda(t+1)) + C(a, m-2 - lambda(t+1)),
    with a = 2m - 1 + t. The 4^-m factor evaluates the u-coefficients at x = 1/4.
    """
    if t < 0 or m < 0:
        raise InvalidParameterError(f"t and m must be non-negative, got t={t}, m={m}")
    if t == 0:
        return Fraction(int(m == 0))
    a = 2 * m - 1 + t
    total = 0
    lam = 0
    while lam * (t + 1) <= m:
        base = m - lam * (t + 1)
        total += binom(a, base) - 2 * binom(a, base - 1) + binom(a, base - 2)
        lam += 1
    return Fraction((t + 1) * total, 2**t * 4**m)


def limit_mass_from_f_parts(t: int, m: int) -> Fraction:
    """The same mass read from the F-part counts: (t+1)/2^t * 4^-m * [x^m] 1/D_t."""
    return Fraction((t + 1) * f_part_counts(1, t, m)[m], 2**t * 4**m)
