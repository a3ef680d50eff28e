"""
Exact distribution of J, the first-arrival time at level t, for Dyck paths (k = 1).

Tables are indexed by s = (J - t)/2. Finite-n tables come from the
coefficients of (1/D_t(xw)) G(x) divided by [x^n] C(x)^(t+1); limiting tables
come from the closed-form masses.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.config import get_settings
from ..core.exceptions import InconsistencyError, InvalidParameterError
from ..series.closed_forms import limit_dist_mass, mean_j, ycoeff
from ..series.exact_series import BivariateNumerator, bivariate_numerator

logger = logging.getLogger(__name__)


class DistributionTable(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t: int
    n: Optional[int] = None  # None marks the limiting law
    masses: Dict[int, Fraction]
    support_bound: int
    weights: Optional[Dict[int, int]] = None
    total: Optional[int] = None
    residual: Fraction = Fraction(0)

    @model_validator(mode="after")
    def _probabilities(self) -> "DistributionTable":
        if any(mass < 0 for mass in self.masses.values()):
            raise ValueError("negative probability mass")
        if self.n is not None and sum(self.masses.values()) != 1:
            raise ValueError(f"finite-n masses for n={self.n} do not sum to 1")
        if self.residual < 0:
            raise ValueError("masses sum to more than 1")
        return self

    @property
    def is_limit(self) -> bool:
        return self.n is None

    def mass(self, s: int) -> Fraction:
        return self.masses.get(s, Fraction(0))

    def mean_s(self) -> Fraction:
        return sum((s * mass for s, mass in self.masses.items()), Fraction(0))

    def mean_j(self) -> Fraction:
        return self.t + 2 * self.mean_s()

    def rows(self) -> List[Dict[str, object]]:
        rows = []
        for s, mass in sorted(self.masses.items()):
            if self.weights is not None:
                num, den = self.weights[s], self.total
            else:
                num, den = mass.numerator, mass.denominator
            rows.append(
                {"s": s, "J": self.t + 2 * s, "mass_num": num, "mass_den": den, "mass_float": float(mass)}
            )
        return rows


def _check_t(t: int) -> None:
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")


def _finite_from(numerator: BivariateNumerator, n: int) -> DistributionTable:
    t = numerator.t
    row = numerator.row(n)
    total = ycoeff(1, t + 1, n)
    if sum(row) != total:
        raise InconsistencyError(f"row {n} sums to {sum(row)}, expected [x^{n}]C^{t + 1} = {total}")
    weights = {s: w for s, w in enumerate(row) if w}
    masses = {s: Fraction(w, total) for s, w in weights.items()}
    return DistributionTable(t=t, n=n, masses=masses, support_bound=n, weights=weights, total=total)


def finite_dist(t: int, n: int) -> DistributionTable:
    _check_t(t)
    if n < 0:
        raise InvalidParameterError(f"n must be non-negative, got {n}")
    return _finite_from(bivariate_numerator(t, n), n)


def limit_dist(
    t: int,
    M: Optional[int] = None,
    tolerance: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> DistributionTable:
    """
    Limiting masses for m = 0..M. Without M, stop at the first M whose
    residual 1 - sum(masses) drops below the configured tolerance.
    """
    _check_t(t)
    settings = get_settings()
    masses: Dict[int, Fraction] = {}
    accumulated = Fraction(0)
    if M is not None:
        if M < 0:
            raise InvalidParameterError(f"M must be non-negative, got {M}")
        for m in range(M + 1):
            mass = limit_dist_mass(t, m)
            accumulated += mass
            if mass:
                masses[m] = mass
        return DistributionTable(t=t, masses=masses, support_bound=M, residual=1 - accumulated)

    target = Fraction(tolerance if tolerance is not None else settings.RESIDUAL_TOLERANCE)
    cap = max_terms if max_terms is not None else settings.LIMIT_MAX_TERMS
    m = -1
    while 1 - accumulated >= target:
        m += 1
        if m > cap:
            logger.warning("limit_dist(t=%d): residual still %.3g after %d terms", t, float(1 - accumulated), cap)
            m = cap
            break
        mass = limit_dist_mass(t, m)
        accumulated += mass
        if mass:
            masses[m] = mass
    logger.info("limit_dist(t=%d): truncated at M=%d, residual %.3g", t, m, float(1 - accumulated))
    return DistributionTable(t=t, masses=masses, support_bound=m, residual=1 - accumulated)


class MeanConvergence(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t: int
    points: Tuple[Tuple[int, Fraction], ...]
    limit: Fraction
    monotone: bool


def mean_convergence(t: int, n_list: Sequence[int]) -> MeanConvergence:
    """
    Exact E[J] for each n, and whether the distance to t(t+2)/3 shrinks
    monotonically along n_list.
    """
    _check_t(t)
    ns = sorted(set(n_list))
    if not ns:
        raise InvalidParameterError("n_list must not be empty")
    numerator = bivariate_numerator(t, ns[-1])
    points = tuple((n, _finite_from(numerator, n).mean_j()) for n in ns)
    limit = mean_j(t)
    gaps = [abs(mean - limit) for _, mean in points]
    monotone = all(later <= earlier for earlier, later in zip(gaps, gaps[1:]))
    if not monotone:
        logger.info("mean_convergence(t=%d): distance to %s is not monotone", t, limit)
    return MeanConvergence(t=t, points=points, limit=limit, monotone=monotone)
