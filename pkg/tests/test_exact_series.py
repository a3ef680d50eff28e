import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.core.exceptions import InvalidParameterError
from src.series.closed_forms import ycoeff
from src.series.exact_series import Series, bivariate_numerator, mul, power, reciprocal, solve_y


def test_solve_y_examples():
    assert solve_y(1, 4).coeffs == (1, 1, 2, 5, 14)
    assert solve_y(2, 2).coeffs == (1, 1, 3)
    assert solve_y(3, 0).coeffs == (1,)
    assert solve_y(2, 3).k == 2


def test_solve_y_matches_coefficient_formula():
    for k in (1, 2, 3):
        y = solve_y(k, 10)
        assert list(y) == [ycoeff(k, 1, n) for n in range(11)]


def test_solve_y_rejects_bad_parameters():
    with pytest.raises(InvalidParameterError):
        solve_y(0, 3)
    with pytest.raises(InvalidParameterError):
        solve_y(1, -1)


def test_reciprocal_geometric():
    assert reciprocal(Series([1, -1], 5)).coeffs == (1, 1, 1, 1, 1, 1)
    assert reciprocal(Series([1, -2], 4)).coeffs == (1, 2, 4, 8, 16)


def test_reciprocal_needs_unit_constant():
    with pytest.raises(InvalidParameterError):
        reciprocal(Series([2, 1], 3))
    with pytest.raises(InvalidParameterError):
        reciprocal(Series([0, 1], 3))


def test_power_of_catalan():
    assert power(solve_y(1, 3), 2).coeffs == (1, 2, 5, 14)
    assert power(solve_y(1, 3), 0) == Series.one(3)


def test_truncation_takes_smaller_order():
    a = Series([1, 1, 1, 1], 3)
    b = Series([1, 1], 1)
    assert (a + b).order == 1
    assert mul(a, b).coeffs == (1, 2)


def test_shift_and_scale():
    a = Series([1, 2, 3], 3)
    assert a.shift(2).coeffs == (0, 0, 1, 2)
    assert (3 * a).coeffs == (3, 6, 9, 0)
    assert (a - a) == Series([], 3)


def test_series_rejects_negative_order():
    with pytest.raises(InvalidParameterError):
        Series([1], -1)


coefficients = st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=12)


@given(rest=coefficients, sign=st.sampled_from([1, -1]))
def test_reciprocal_inverse_law(rest, sign):
    a = Series([sign] + rest, len(rest))
    assert mul(a, reciprocal(a)) == Series.one(a.order)


@given(a=coefficients, b=coefficients)
def test_mul_commutes(a, b):
    order = min(len(a), len(b)) - 1
    x, y = Series(a, order), Series(b, order)
    assert mul(x, y) == mul(y, x)


@given(k=st.integers(min_value=1, max_value=4), j=st.integers(min_value=1, max_value=6))
def test_power_matches_closed_form(k, j):
    y = solve_y(k, 8)
    assert list(power(y, j)) == [ycoeff(k, j, n) for n in range(9)]


def test_bivariate_numerator_rows():
    assert bivariate_numerator(2, 2).row(2) == [6, 2, 1]
    assert bivariate_numerator(1, 1).row(1) == [2, 0]
    numerator = bivariate_numerator(0, 5)
    for n in range(6):
        assert numerator.row(n) == [ycoeff(1, 1, n)] + [0] * n


def test_bivariate_numerator_matrix_is_lower_triangular():
    matrix = bivariate_numerator(2, 3).matrix()
    assert len(matrix) == 4
    assert all(matrix[n][s] == 0 for n in range(4) for s in range(n + 1, 4))
    assert matrix[2][:3] == [6, 2, 1]
    assert bivariate_numerator(2, 3)[(1, 2)] == 0


def test_shift_rejects_negative_power():
    with pytest.raises(InvalidParameterError):
        Series([1, 2, 3], 3).shift(-1)
    assert Series([1, 2], 2).shift(0) == Series([1, 2], 2)
