"""
Generating functions of paths confined to the strip -t..h.

phi_i counts paths from level 0 to level i inside the strip. It is computed
twice: by the level recurrence phi_i = z phi_(i-1) + z phi_(i+k) + [i=0] run
as a dynamic program, and as a quotient over the determinant D_(h+t+1)
expanded with exact series. All series arithmetic is in x = z^(k+1); a
LengthSeries adds the step offset that maps x-degrees back to lengths.
"""
import logging
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.exceptions import InconsistencyError, InvalidParameterError
from .closed_forms import d_poly, d_poly_series
from .exact_series import Series, mul, power, reciprocal, solve_y

logger = logging.getLogger(__name__)


class StripSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    t: int
    h: int
    i: int
    N: int

    @model_validator(mode="after")
    def _bounds(self) -> "StripSpec":
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.t < 0 or self.h < 0 or self.N < 0:
            raise ValueError("t, h and N must be non-negative")
        if not -self.t <= self.i <= self.h:
            raise ValueError(f"end level {self.i} outside the strip -{self.t}..{self.h}")
        return self

    @property
    def width(self) -> int:
        return self.h + self.t + 1

    @property
    def max_length(self) -> int:
        return (self.k + 1) * self.N


class LengthSeries:
    """
    Counts of paths by length: coefficient n of `series` belongs to length
    offset + (k+1)n.
    """

    __slots__ = ("k", "offset", "series")

    def __init__(self, k: int, offset: int, series: Series):
        self.k = k
        self.offset = offset
        self.series = series

    @property
    def max_length(self) -> int:
        return (self.k + 1) * self.series.order

    def by_length(self) -> List[int]:
        counts = [0] * (self.max_length + 1)
        for n, c in enumerate(self.series):
            length = self.offset + (self.k + 1) * n
            if length <= self.max_length:
                counts[length] = c
        return counts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LengthSeries):
            return NotImplemented
        return self.k == other.k and self.by_length() == other.by_length()

    def __repr__(self) -> str:
        return f"LengthSeries(k={self.k}, offset={self.offset}, {self.series!r})"


def strip_counts_by_length(k: int, low: int, high: int, end: int, max_length: int) -> List[int]:
    """
    Entry L is the number of L-step paths from 0 to `end` inside [low, high].
    """
    width = high - low + 1
    current = [0] * width
    current[-low] = 1
    counts = [current[end - low]]
    for _ in range(max_length):
        nxt = [0] * width
        for idx in range(width):
            # arrive by an up-step from idx-1 or by a down-step from idx+k
            ways = 0
            if idx >= 1:
                ways += current[idx - 1]
            if idx + k < width:
                ways += current[idx + k]
            nxt[idx] = ways
        current = nxt
        counts.append(current[end - low])
    return counts


def _offset(level: int, k: int) -> int:
    return level % (k + 1)


def phi_series_dp(spec: StripSpec) -> LengthSeries:
    offset = _offset(spec.i, spec.k)
    counts = strip_counts_by_length(
        spec.k, -spec.t, spec.h, spec.i, offset + (spec.k + 1) * spec.N
    )
    coeffs = [counts[offset + (spec.k + 1) * n] for n in range(spec.N + 1)]
    return LengthSeries(spec.k, offset, Series(coeffs, spec.N))


def _z_poly(k: int, m: int) -> List[int]:
    """D_m written in z: the coefficient of x^l moves to z^((k+1)l)."""
    coeffs = d_poly(k, m).coeffs
    poly = [0] * ((k + 1) * (len(coeffs) - 1) + 1)
    for ell, c in enumerate(coeffs):
        poly[(k + 1) * ell] = c
    return poly


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a: List[int], b: List[int]) -> List[int]:
    size = max(len(a), len(b))
    return [
        (a[n] if n < len(a) else 0) - (b[n] if n < len(b) else 0) for n in range(size)
    ]


def strip_numerators(k: int, t: int, h: int) -> Dict[int, List[int]]:
    """
    Numerators N_e (as z-polynomials) with phi_e = N_e / D_(h+t+1), for every
    level e in -t..h.

    Levels 0..h use z^e D_t D_(h-e). Below the start, the level recurrence is
    solved downwards: N_(e-1) = (N_e - z N_(e+k) - [e=0] D_(h+t+1)) / z.
    """
    numerators: Dict[int, List[int]] = {}
    d_t = _z_poly(k, t)
    for e in range(h + 1):
        numerators[e] = _poly_mul([0] * e + [1], _poly_mul(d_t, _z_poly(k, h - e)))
    denominator = _z_poly(k, h + t + 1)
    for e in range(0, -t, -1):
        upper = numerators.get(e + k, [0])
        rest = _poly_sub(numerators[e], [0] + upper)
        if e == 0:
            rest = _poly_sub(rest, denominator)
        if rest[0] != 0:
            raise InconsistencyError(f"numerator for level {e - 1} is not divisible by z")
        numerators[e - 1] = rest[1:] or [0]
    return numerators


def _as_length_series(poly: List[int], level: int, k: int, order: int, inverse: Series) -> LengthSeries:
    offset = _offset(level, k)
    coeffs = []
    for power_of_z, c in enumerate(poly):
        if not c:
            continue
        n, rem = divmod(power_of_z - offset, k + 1)
        if rem:
            raise InconsistencyError(f"z^{power_of_z} cannot belong to a path ending on level {level}")
        coeffs.extend([0] * (n + 1 - len(coeffs)))
        coeffs[n] += c
    return LengthSeries(k, offset, mul(Series(coeffs, order), inverse))


def phi_series_cramer(spec: StripSpec) -> LengthSeries:
    numerators = strip_numerators(spec.k, spec.t, spec.h)
    inverse = reciprocal(d_poly_series(spec.k, spec.width, spec.N))
    return _as_length_series(numerators[spec.i], spec.i, spec.k, spec.N, inverse)


def phi_limit_h(k: int, t: int, i: int, order: int) -> LengthSeries:
    """
    The h -> oo limit D_t z^i y^(i+t+1): paths bounded below by -t only.
    """
    if i < 0 or t < 0:
        raise InvalidParameterError(f"phi_limit_h needs t, i >= 0, got t={t}, i={i}")
    y = solve_y(k, order)
    return LengthSeries(k, i, mul(d_poly_series(k, t, order), power(y, i + t + 1)))


def g_series(k: int, t: int, order: int) -> LengthSeries:
    """
    Paths from level t to level t that never go below 0.

    Computed as the strip quotient D_t D_h / D_(h+t+1) with h = (k+1)*order,
    which no path of at most that many steps can reach.
    """
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")
    h = (k + 1) * order
    numerator = mul(d_poly_series(k, t, order), d_poly_series(k, h, order))
    return LengthSeries(k, 0, mul(numerator, reciprocal(d_poly_series(k, h + t + 1, order))))


def f_parts_from_strip(k: int, t: int, order: int) -> List[int]:
    """
    F-part counts read off the strip 0..t-1: a path ending on the top level
    t-1, followed by one up-step. Entry l belongs to length t + (k+1)l.
    """
    if t < 1:
        raise InvalidParameterError(f"the strip reading needs t >= 1, got {t}")
    counts = strip_counts_by_length(k, 0, t - 1, t - 1, t - 1 + (k + 1) * order)
    return [counts[t - 1 + (k + 1) * ell] for ell in range(order + 1)]
