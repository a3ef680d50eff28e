from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st
from pydantic import ValidationError

from src.core.exceptions import InvalidParameterError
from src.paths.brute_force import EnumSpec, enumerate_kt, first_arrival_counts
from src.series.closed_forms import (
    DPoly,
    RatioReport,
    binom,
    count_general,
    count_simple,
    d_poly,
    d_poly_series,
    f_part_counts,
    limit_dist_mass,
    limit_mass_from_f_parts,
    mean_half_excess,
    mean_j,
    ratio_limit,
    ratio_report,
    rho,
    y_power_series,
    ycoeff,
)
from src.series.exact_series import mul, power, solve_y


def test_binom():
    assert binom(7, 3) == 35
    assert binom(5, -1) == 0
    assert binom(0, 0) == 1
    assert binom(3, 5) == 0
    with pytest.raises(InvalidParameterError):
        binom(-1, 0)


def test_ycoeff_examples():
    assert ycoeff(1, 1, 4) == 14
    assert ycoeff(2, 1, 2) == 3
    assert all(ycoeff(k, j, 0) == 1 for k in (1, 2, 5) for j in (1, 3, 7))
    with pytest.raises(InvalidParameterError):
        ycoeff(1, 0, 2)


def test_y_power_series_matches_solver():
    assert y_power_series(2, 3, 6) == power(solve_y(2, 6), 3)
    assert y_power_series(1, 0, 3).coeffs == (1, 0, 0, 0)


def test_count_simple():
    assert count_simple(2, 1, 2) == 7
    assert count_simple(1, 0, 3) == 5
    assert count_simple(3, 3, 0) == 1
    with pytest.raises(InvalidParameterError):
        count_simple(1, 2, 2)


def test_d_poly_examples():
    assert d_poly(1, 2).coeffs == (1, -1)
    assert d_poly(1, 5).coeffs == (1, -4, 3)
    assert d_poly(3, 3).coeffs == (1,)
    assert d_poly(1, 3).coeffs == (1, -2)


def test_d_poly_identity_grid():
    # d_poly raises InconsistencyError if the sum and the recursion disagree
    for k in range(1, 6):
        for m in range(41):
            poly = d_poly(k, m)
            assert poly.degree == m // (k + 1)
            if m <= k:
                assert poly.coeffs == (1,)


def test_d_poly_evaluate():
    # D_t(1/4) for k = 1 is (t+1)/2^t
    for t in range(8):
        assert d_poly(1, t).evaluate(Fraction(1, 4)) == Fraction(t + 1, 2**t)


def test_dpoly_model_rejects_bad_constant():
    with pytest.raises(ValidationError):
        DPoly(k=1, m=2, coeffs=(2, -1))


def test_count_general_examples():
    assert count_general(1, 2, 2) == 6
    assert count_general(1, 3, 2) == 6
    assert count_general(1, 2, 1) == 2
    assert count_general(2, 1, 2) == 7
    assert [count_general(1, 0, n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


def test_count_general_three_ways():
    for k in (1, 2, 3):
        for t in range(7):
            n_max = 5
            series = mul(d_poly_series(k, t, n_max), power(solve_y(k, n_max), t + 1))
            for n in range(n_max + 1):
                brute = sum(1 for _ in enumerate_kt(EnumSpec(k=k, t=t, n=n)))
                assert count_general(k, t, n) == series[n] == brute, (k, t, n)


@given(k=st.integers(min_value=1, max_value=5), n=st.integers(min_value=0, max_value=30), data=st.data())
def test_count_simple_equals_general(k, n, data):
    t = data.draw(st.integers(min_value=0, max_value=k))
    assert count_general(k, t, n) == count_simple(k, t, n)


def test_f_part_counts():
    assert f_part_counts(1, 2, 5) == [1] * 6
    assert f_part_counts(1, 3, 4) == [1, 2, 4, 8, 16]
    assert f_part_counts(3, 2, 4) == [1, 0, 0, 0, 0]


def test_f_part_counts_match_first_arrivals():
    for k in (1, 2, 3):
        for t in range(7):
            l_max = min(4, (32 - t) // (k + 1))
            assert f_part_counts(k, t, l_max) == first_arrival_counts(k, t, l_max), (k, t)


def test_ratio_limits():
    assert rho(1) == Fraction(1, 4)
    assert rho(2) == Fraction(4, 27)
    assert ratio_limit(1, 2) == Fraction(3, 4)
    assert ratio_limit(1, 3) == Fraction(1, 2)
    for k in (1, 2, 3, 4):
        for t in range(k + 1):
            assert ratio_limit(k, t) == 1


def test_ratio_report_identically_one_for_small_t():
    for k in (1, 2, 3):
        for t in range(k + 1):
            report = ratio_report(k, t, 5)
            assert all(q == 1 for _, q in report.quotients)


def test_ratio_report_converges():
    report = ratio_report(1, 2, 500)
    n, q = report.final
    assert n == 500
    assert abs(float(q) - 0.75) < 0.02
    assert report.limit == Fraction(3, 4)
    assert report.limit_float == 0.75


def test_ratio_report_model_rejects_wrong_limit():
    with pytest.raises(ValidationError):
        RatioReport(k=2, t=1, quotients=((0, Fraction(1)),), limit=Fraction(1, 2), limit_float=0.5)


def test_means():
    assert mean_j(1) == 1
    assert mean_j(3) == 5
    assert mean_j(0) == 0
    assert mean_half_excess(3) == 1


def test_limit_dist_mass_examples():
    assert limit_dist_mass(1, 0) == 1
    assert limit_dist_mass(1, 3) == 0
    assert limit_dist_mass(2, 0) == Fraction(3, 4)
    assert limit_dist_mass(2, 1) == Fraction(3, 16)
    assert limit_dist_mass(0, 0) == 1
    assert limit_dist_mass(0, 2) == 0


def test_limit_dist_mass_geometric_at_t2():
    for m in range(30):
        assert limit_dist_mass(2, m) == Fraction(3, 4) / 4**m


def test_limit_masses_two_ways():
    for t in range(1, 11):
        for m in range(25):
            assert limit_dist_mass(t, m) == limit_mass_from_f_parts(t, m), (t, m)


def test_k_must_be_positive():
    for call in (
        lambda: ycoeff(0, 1, 1),
        lambda: count_simple(0, 0, 1),
        lambda: count_general(0, 1, 1),
        lambda: rho(0),
        lambda: ratio_limit(0, 1),
        lambda: ratio_limit(-1, 0),
    ):
        with pytest.raises(InvalidParameterError):
            call()
