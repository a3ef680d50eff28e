"""
The oracle grid behind `kdyck verify`.

Each check compares two or more independent computations exactly. Checks run
on a thread pool; results are returned in the fixed order of CHECKS.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Callable, List, Tuple

from pydantic import BaseModel

from ..analysis.distribution_k1 import finite_dist, limit_dist, mean_convergence
from ..core.config import get_settings
from ..core.exceptions import InvalidParameterError, KDyckError
from ..paths.bijections import from_tuple, to_tuple
from ..paths.brute_force import (
    EnumSpec,
    count_strip,
    enumerate_kt,
    enumerate_tuples,
    first_arrival_counts,
    j_histogram,
)
from ..paths.core_paths import StepSeq, is_kt_dyck, level_profile
from ..series.closed_forms import (
    count_general,
    count_simple,
    d_poly,
    f_part_counts,
    limit_dist_mass,
    limit_mass_from_f_parts,
    mean_half_excess,
    ratio_report,
    ycoeff,
)
from ..series.exact_series import mul, power, solve_y
from ..series.strip_solver import (
    StripSpec,
    f_parts_from_strip,
    g_series,
    phi_limit_h,
    phi_series_cramer,
    phi_series_dp,
)

logger = logging.getLogger(__name__)

PROFILES = ("quick", "full")


class Profile(BaseModel):
    name: str
    brute_cap: int
    count_n_max: int
    dist_n_max: int


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str
    seconds: float


def make_profile(name: str) -> Profile:
    settings = get_settings()
    if name == "quick":
        return Profile(name=name, brute_cap=settings.QUICK_BRUTE_LIMIT, count_n_max=5, dist_n_max=6)
    if name == "full":
        return Profile(name=name, brute_cap=settings.BRUTE_LIMIT, count_n_max=6, dist_n_max=8)
    raise InvalidParameterError(f"unknown profile {name!r}; choose from {', '.join(PROFILES)}")


def _counts_agree(profile: Profile) -> str:
    cases = 0
    for k, t in product((1, 2, 3), range(7)):
        y = solve_y(k, profile.count_n_max)
        series = mul(d_poly(k, t).to_series(profile.count_n_max), power(y, t + 1))
        for n in range(profile.count_n_max + 1):
            if (k + 1) * n > min(24, profile.brute_cap):
                break
            brute = sum(1 for _ in enumerate_kt(EnumSpec(k=k, t=t, n=n), profile.brute_cap))
            formula = count_general(k, t, n)
            if not formula == series[n] == brute:
                raise AssertionError(f"k={k} t={t} n={n}: formula {formula}, series {series[n]}, brute {brute}")
            cases += 1
    return f"{cases} (k, t, n) cases agree"


def _classical(profile: Profile) -> str:
    catalan = [count_general(1, 0, n) for n in range(6)]
    if catalan != [1, 1, 2, 5, 14, 42]:
        raise AssertionError(f"k=1, t=0 gives {catalan}")
    for k in (1, 2, 3):
        for t in range(k + 1):
            for n in range(profile.count_n_max + 1):
                if count_simple(k, t, n) != ycoeff(k, t + 1, n) or count_general(k, t, n) != count_simple(k, t, n):
                    raise AssertionError(f"simple count mismatch at k={k} t={t} n={n}")
    return "Catalan numbers and the t <= k specialization hold"


def _determinants(profile: Profile) -> str:
    for k in range(1, 6):
        for m in range(41):
            poly = d_poly(k, m)  # raises when sum and recursion differ
            if m <= k and poly.coeffs != (1,):
                raise AssertionError(f"D_{m} != 1 for k={k}")
    return "D_m sum == recursion for k <= 5, m <= 40"


def _bijection(profile: Profile) -> str:
    checked = 0
    for k in (1, 2, 3):
        for t in range(k + 1):
            for n in range(5):
                if (k + 1) * n > profile.brute_cap:
                    break
                paths = list(enumerate_kt(EnumSpec(k=k, t=t, n=n), profile.brute_cap))
                for p in paths:
                    if from_tuple(to_tuple(p, t)) != p:
                        raise AssertionError(f"round trip failed for {p.steps} (k={k}, t={t})")
                tuples = list(enumerate_tuples(k, t, n, profile.brute_cap))
                for parts in tuples:
                    if to_tuple(from_tuple(parts), t) != parts:
                        raise AssertionError(f"round trip failed for {parts.to_texts()} (k={k}, t={t})")
                expected = ycoeff(k, t + 1, n)
                if not len(paths) == len(tuples) == expected:
                    raise AssertionError(
                        f"k={k} t={t} n={n}: {len(paths)} paths, {len(tuples)} tuples, expected {expected}"
                    )
                checked += len(paths)
    return f"{checked} paths round-trip"


def _strips(profile: Profile) -> str:
    cases = 0
    for k, t, h in product((1, 2), range(5), range(5)):
        order = -(-16 // (k + 1))
        for i in range(-t, h + 1):
            spec = StripSpec(k=k, t=t, h=h, i=i, N=order)
            dp = phi_series_dp(spec).by_length()
            cramer = phi_series_cramer(spec).by_length()
            oracle = EnumSpec(k=k, t=t, n=0, h=h, i=i)
            for length in range(17):
                brute = count_strip(oracle, length)
                if not dp[length] == cramer[length] == brute:
                    raise AssertionError(
                        f"k={k} t={t} h={h} i={i} length={length}: dp {dp[length]}, "
                        f"cramer {cramer[length]}, brute {brute}"
                    )
            cases += 1
    return f"{cases} strips agree up to length 16"


def _f_parts(profile: Profile) -> str:
    for k, t in product((1, 2, 3), range(7)):
        l_max = min(4, (profile.brute_cap - t) // (k + 1))
        if l_max < 0:
            continue
        expected = first_arrival_counts(k, t, l_max, profile.brute_cap)
        got = f_part_counts(k, t, l_max)
        if got != expected:
            raise AssertionError(f"k={k} t={t}: 1/D_t gives {got}, brute force {expected}")
    return "1/D_t coefficients match first-arrival counts"


def _finite_distribution(profile: Profile) -> str:
    table = finite_dist(2, 2)
    if table.masses != {0: Fraction(6, 9), 1: Fraction(2, 9), 2: Fraction(1, 9)}:
        raise AssertionError(f"finite_dist(2, 2) = {table.masses}")
    for t in range(5):
        for n in range(profile.dist_n_max + 1):
            if 2 * n + t > profile.brute_cap:
                break
            histogram = j_histogram(t, n, limit=profile.brute_cap)
            total = sum(histogram.values())
            expected = {s: Fraction(c, total) for s, c in histogram.items()}
            if finite_dist(t, n).masses != expected:
                raise AssertionError(f"t={t} n={n}: series and brute-force histograms differ")
    return "finite-n masses equal normalized histograms"


def _limit_law(profile: Profile) -> str:
    for t in range(11):
        table = limit_dist(t)
        if table.residual >= Fraction(1, 10**12):
            raise AssertionError(f"t={t}: residual {float(table.residual)}")
    for t in range(9):
        mean = limit_dist(t, 200).mean_s()
        if abs(float(mean - mean_half_excess(t))) > 1e-6:
            raise AssertionError(f"t={t}: truncated mean {float(mean)}")
    for m in range(30):
        if limit_dist_mass(2, m) != Fraction(3, 4) / 4**m:
            raise AssertionError(f"t=2, m={m}: mass is not (3/4) 4^-m")
    return "limiting masses normalize, mean t(t-1)/6, geometric at t=2"


def _convergence(profile: Profile) -> str:
    for t in range(5):
        finite = finite_dist(t, 200)
        limit = limit_dist(t, 3)
        for s in range(4):
            gap = abs(float(finite.mass(s) - limit.mass(s)))
            if gap >= 0.01:
                raise AssertionError(f"t={t} s={s}: |P_200 - P_oo| = {gap}")
    return "P_200(s) within 0.01 of the limit for s <= 3, t <= 4"


def _ratio(profile: Profile) -> str:
    final = ratio_report(1, 2, 500).final[1]
    if abs(float(final) - 0.75) >= 0.02:
        raise AssertionError(f"k=1 t=2 n=500 ratio {float(final)}")
    for k in (1, 2, 3):
        for t in range(k + 1):
            report = ratio_report(k, t, profile.count_n_max)
            if any(q != 1 for _, q in report.quotients) or report.limit != 1:
                raise AssertionError(f"ratio not identically 1 for k={k} t={t}")
    return f"ratio(1, 2, 500) = {float(final):.4f}; identically 1 for t <= k"


def _mean(profile: Profile) -> str:
    report = mean_convergence(3, [50, 100, 300])
    last = report.points[-1][1]
    if abs(float(last) - 5) > 0.25:
        raise AssertionError(f"E[J] at n=300 is {float(last)}")
    for t in (0, 1):
        if any(mean != t for _, mean in mean_convergence(t, [1, 5, 20]).points):
            raise AssertionError(f"t={t} is not degenerate")
    return f"E[J](t=3, n=300) = {float(last):.4f}"


def _strip_limit(profile: Profile) -> str:
    order = 4
    for k, t, i in product((1, 2, 3), range(4), range(3)):
        spec = StripSpec(k=k, t=t, h=(k + 1) * order + i, i=i, N=order)
        if phi_series_cramer(spec) != phi_limit_h(k, t, i, order):
            raise AssertionError(f"k={k} t={t} i={i}: quotient differs from D_t z^i y^(i+t+1)")
    for k, t in product((1, 2, 3), range(6)):
        if g_series(k, t, order) != phi_limit_h(k, t, 0, order):
            raise AssertionError(f"k={k} t={t}: G series differs from the h -> oo limit at i=0")
    return "strip quotients reach the one-sided limit once h exceeds the length"


def _f_part_routes(profile: Profile) -> str:
    for k, t in product((1, 2, 3), range(1, 7)):
        if f_parts_from_strip(k, t, 5) != f_part_counts(k, t, 5):
            raise AssertionError(f"k={k} t={t}: strip reading differs from 1/D_t")
    for t in range(1, 9):
        for m in range(20):
            if limit_dist_mass(t, m) != limit_mass_from_f_parts(t, m):
                raise AssertionError(f"t={t} m={m}: binomial mass differs from the F-part mass")
    return "F-part counts and limiting masses agree across both routes"


def _strip_totals(profile: Profile) -> str:
    max_length = min(12, profile.brute_cap // 2)
    for k, t, h in product((1, 2), range(3), range(3)):
        for length in range(max_length + 1):
            confined = 0
            for steps in product("UD", repeat=length):
                levels = [0] + level_profile(StepSeq.model_construct(steps="".join(steps), k=k))
                if min(levels) >= -t and max(levels) <= h:
                    confined += 1
            by_end = sum(count_strip(EnumSpec(k=k, t=t, n=0, h=h, i=i), length) for i in range(-t, h + 1))
            if by_end != confined:
                raise AssertionError(
                    f"k={k} t={t} h={h} length={length}: {by_end} by end level, {confined} confined"
                )
    for k, t in product((1, 2, 3), range(4)):
        for n in range(4):
            if (k + 1) * n > profile.brute_cap:
                break
            listed = sum(1 for _ in enumerate_kt(EnumSpec(k=k, t=t, n=n), profile.brute_cap))
            length = (k + 1) * n
            if listed != count_strip(EnumSpec(k=k, t=t, n=n, h=length, i=0), length):
                raise AssertionError(f"k={k} t={t} n={n}: an inactive upper bound changed the count")
    return f"strip totals hold up to length {max_length}"


def _monotone_in_t(profile: Profile) -> str:
    checked = 0
    for k, t in product((1, 2, 3), range(4)):
        for n in range(4):
            if (k + 1) * n > profile.brute_cap:
                break
            for p in enumerate_kt(EnumSpec(k=k, t=t, n=n), profile.brute_cap):
                depth = -min([0] + level_profile(p))
                for bound in range(t + 3):
                    if is_kt_dyck(p, bound) != (bound >= depth):
                        raise AssertionError(f"{p.steps} (k={k}): membership at t={bound} is not monotone")
                checked += 1
    return f"{checked} paths stay k_t-Dyck as t grows"


CHECKS: List[Tuple[str, Callable[[Profile], str]]] = [
    ("counts", _counts_agree),
    ("classical", _classical),
    ("determinants", _determinants),
    ("bijection", _bijection),
    ("strips", _strips),
    ("f-parts", _f_parts),
    ("finite-distribution", _finite_distribution),
    ("limit-law", _limit_law),
    ("convergence", _convergence),
    ("ratio", _ratio),
    ("mean", _mean),
    ("strip-limit", _strip_limit),
    ("f-part-routes", _f_part_routes),
    ("strip-totals", _strip_totals),
    ("monotone-t", _monotone_in_t),
]


def _run_one(check: Tuple[str, Callable[[Profile], str]], profile: Profile) -> CheckOutcome:
    name, fn = check
    start = time.perf_counter()
    try:
        detail = fn(profile)
        passed = True
        logger.info("check %s passed: %s", name, detail)
    except (AssertionError, KDyckError) as e:
        detail = str(e)
        passed = False
        logger.error("check %s failed: %s", name, detail)
    return CheckOutcome(name=name, passed=passed, detail=detail, seconds=time.perf_counter() - start)


def run_checks(profile_name: str = "quick") -> List[CheckOutcome]:
    profile = make_profile(profile_name)
    workers = max(1, get_settings().VERIFY_WORKERS)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda check: _run_one(check, profile), CHECKS))
