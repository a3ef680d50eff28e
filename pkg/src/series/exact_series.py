"""
Truncated power series in x = z^(k+1) with exact integer coefficients.

A Series always carries its truncation order N explicitly. Binary operations
on series of different orders truncate to the smaller one; nothing ever
extends an order silently.
"""
import logging
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from ..core.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class Series:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[int], order: int):
        if order < 0:
            raise InvalidParameterError(f"truncation order must be non-negative, got {order}")
        padded = [int(c) for c in coeffs[: order + 1]]
        padded.extend([0] * (order + 1 - len(padded)))
        self._coeffs: Tuple[int, ...] = tuple(padded)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> int:
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if len(self._coeffs) > 8 else ""
        return f"Series([{terms}{more}], order={self.order})"

    def with_order(self, order: int) -> "Series":
        """Truncate, or pad with zeros when the caller knows the higher terms vanish."""
        return Series(self._coeffs, order)

    def shift(self, power: int) -> "Series":
        """Multiply by x^power, keeping the order."""
        if power < 0:
            raise InvalidParameterError(f"shift power must be non-negative, got {power}")
        return Series([0] * power + list(self._coeffs), self.order)

    def scale(self, factor: int) -> "Series":
        return Series([factor * c for c in self._coeffs], self.order)

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series([a + b for a, b in zip(self._coeffs, other._coeffs)], order)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, j: int) -> "Series":
        return power(self, j)


def mul(a: Series, b: Series) -> Series:
    """
    Truncated Cauchy product
    """
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (order + 1)
    for i in range(order + 1):
        ai = ac[i]
        if not ai:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * bc[j]
    return Series(out, order)


def power(a: Series, j: int) -> Series:
    if j < 0:
        raise InvalidParameterError(f"power exponent must be non-negative, got {j}")
    result = Series.one(a.order)
    base = a
    while j:
        if j & 1:
            result = mul(result, base)
        j >>= 1
        if j:
            base = mul(base, base)
    return result


def reciprocal(a: Series) -> Series:
    """
    Multiplicative inverse; the constant term must be +1 or -1.
    """
    c0 = a[0]
    if c0 not in (1, -1):
        raise InvalidParameterError(f"constant term {c0} is not a unit; reciprocal undefined over the integers")
    ac = a.coeffs
    out = [c0]
    for n in range(1, a.order + 1):
        acc = 0
        for i in range(1, n + 1):
            if ac[i]:
                acc += ac[i] * out[n - i]
        out.append(-c0 * acc)
    return Series(out, a.order)


class YSeries(Series):
    """The solution of y = 1 + x*y^(k+1) to a given order."""

    __slots__ = ("k",)

    def __init__(self, coeffs: Sequence[int], order: int, k: int):
        super().__init__(coeffs, order)
        self.k = k

    def __repr__(self) -> str:
        return f"YSeries(k={self.k}, {super().__repr__()})"


@lru_cache(maxsize=64)
def solve_y(k: int, order: int) -> YSeries:
    """
    Fixed-point iteration y <- 1 + x*y^(k+1).

    Iteration m fixes the coefficient of x^m, so each round only needs to be
    carried to order m.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    if order < 0:
        raise InvalidParameterError(f"truncation order must be non-negative, got {order}")
    y = Series.one(0)
    for m in range(1, order + 1):
        y = Series.one(m) + power(y.with_order(m), k + 1).shift(1)
    logger.debug("solve_y(k=%d, N=%d) done", k, order)
    return YSeries(y.coeffs, order, k)


class BivariateNumerator:
    """
    Coefficients of (1/D_t(xw)) * G(x) for k = 1.

    Entry (n, s) is r_s * g_(n-s): r are the coefficients of 1/D_t, read in
    the product variable xw, and g those of G(x) = D_t(x) C(x)^(t+1). The pair
    is stored; rows and the square matrix are built on demand.
    """

    def __init__(self, t: int, r: Series, g: Series):
        self.t = t
        self.r = r
        self.g = g

    @property
    def order(self) -> int:
        return min(self.r.order, self.g.order)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        n, s = index
        if s < 0 or s > n:
            return 0
        return self.r[s] * self.g[n - s]

    def row(self, n: int) -> List[int]:
        return [self.r[s] * self.g[n - s] for s in range(n + 1)]

    def matrix(self) -> List[List[int]]:
        size = self.order + 1
        return [self.row(n) + [0] * (size - n - 1) for n in range(size)]


def bivariate_numerator(t: int, order: int) -> BivariateNumerator:
    # closed_forms builds on this module; import at call time
    from .closed_forms import d_poly_series, y_power_series

    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")
    d_t = d_poly_series(1, t, order)
    r = reciprocal(d_t)
    g = mul(d_t, y_power_series(1, t + 1, order))
    return BivariateNumerator(t, r, g)
