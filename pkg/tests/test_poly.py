import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qes.bethe import solve_spectrum
from qes.errors import InvalidInputError, PoleError
from qes.poly import (MonicPoly, eval_derivative, eval_poly, log_deriv_sums, poly_from_roots,
                      realify, wronskian2)

finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False)


def test_empty_roots_is_constant_one():
    p = poly_from_roots([])
    assert p.degree == 0
    assert eval_poly(p, 3.7) == 1.0


def test_expand_two_roots():
    p = poly_from_roots([-0.5, 2])
    np.testing.assert_allclose(p.real_coeffs(), [-1.0, -1.5, 1.0], rtol=1e-14)


def test_expand_sextic_roots():
    p = poly_from_roots([0.3660254, -1.3660254])
    np.testing.assert_allclose(p.real_coeffs(), [-0.5, 1.0, 1.0], atol=1e-7)


def test_roots_cached_verbatim():
    r = np.array([0.25, -3.0, 1.5])
    np.testing.assert_array_equal(poly_from_roots(r).roots, r)


def test_non_finite_root_rejected():
    with pytest.raises(InvalidInputError):
        poly_from_roots([1.0, np.nan])


def test_leading_coefficient_must_be_one():
    with pytest.raises(InvalidInputError):
        MonicPoly([1.0, 2.0])


@pytest.mark.parametrize("z, order, expected", [(0.0, 0, -1.0), (1.0, 1, 0.5), (4.0, 2, 2.0)])
def test_eval_poly(z, order, expected):
    p = poly_from_roots([-0.5, 2])
    assert eval_poly(p, z, order) == pytest.approx(expected, abs=1e-15)


def test_second_derivative_of_linear_is_zero():
    assert eval_poly(poly_from_roots([3.0]), 1.2, 2) == 0.0


def test_eval_order_out_of_range():
    with pytest.raises(InvalidInputError):
        eval_poly(poly_from_roots([1.0]), 0.0, 3)


def test_eval_vectorized_shape():
    z = np.linspace(-1, 1, 12).reshape(3, 4)
    assert eval_poly(poly_from_roots([0.1, 0.2]), z).shape == (3, 4)


def test_eval_derivative_higher_order():
    p = poly_from_roots([1, 2, 3])
    assert eval_derivative(p, 0.0, 3) == pytest.approx(6.0)


@pytest.mark.parametrize("p, q, z, expected", [
    ([1.0], [3.0], 0.7, 2.0),
    ([-0.5], [2.0], 0.0, 2.5),
])
def test_wronskian_examples(p, q, z, expected):
    assert wronskian2(poly_from_roots(p), poly_from_roots(q), z) == pytest.approx(expected)


def test_wronskian_of_identical_is_zero():
    p = poly_from_roots([0.3, -1.2, 2.0])
    assert wronskian2(p, p, 0.9) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("roots, z, expected", [
    ([], 0.4, (0.0, 0.0)),
    ([1.0], 3.0, (0.5, 0.25)),
    ([-0.5, 2.0], 0.0, (1.5, 4.25)),
])
def test_log_deriv_sums_examples(roots, z, expected):
    s1, s2 = log_deriv_sums(roots, z)
    assert (s1, s2) == pytest.approx(expected, rel=1e-14)


def test_log_deriv_sums_pole_reports_index():
    with pytest.raises(PoleError) as err:
        log_deriv_sums([0.0, 1.0, 2.0], np.array([0.5, 1.0]))
    assert err.value.index == 1


def test_realify_drops_tiny_imaginary_parts():
    assert isinstance(realify(1.0 + 1e-12j), float)
    assert isinstance(realify(1.0 + 1e-3j), complex)


@settings(max_examples=60, deadline=None)
@given(st.lists(finite, min_size=1, max_size=6), finite)
def test_derivative_matches_central_difference(roots, z):
    p = poly_from_roots(roots)
    h = 1e-6
    fd = (eval_poly(p, z + h) - eval_poly(p, z - h)) / (2 * h)
    exact = eval_poly(p, z, 1)
    scale = max(1.0, *(abs(z - r) + 1 for r in roots)) ** len(roots)
    assert abs(fd - exact) <= 1e-6 * max(abs(exact), scale)


@settings(max_examples=60, deadline=None)
@given(st.lists(finite, min_size=1, max_size=6), finite)
def test_s1_is_log_derivative(roots, z):
    d = min(abs(z - r) for r in roots)
    if d < 1e-3:
        return
    p = poly_from_roots(roots)
    s1, _ = log_deriv_sums(roots, z)
    assert s1 == pytest.approx(eval_poly(p, z, 1) / eval_poly(p, z), rel=1e-10, abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=1, max_size=5, unique=True))
def test_roots_round_trip_through_companion(roots):
    roots = sorted(roots)
    if len(roots) > 1 and min(np.diff(roots)) < 0.2:
        return
    p = poly_from_roots(roots)
    back = np.sort(np.real(np.polynomial.polynomial.polyroots(p.coeffs)))
    np.testing.assert_allclose(back, roots, atol=1e-10)


def test_roots_round_trip_through_solver():
    # Hermite-like check: the engine recovers roots it was built from
    from qes.catalog import instantiate
    sol = solve_spectrum(instantiate("sextic6", {"a": 1, "b": 1}, 4).form)
    for s in sol:
        np.testing.assert_allclose(poly_from_roots(s.roots).coeffs, s.poly.coeffs, atol=1e-10)
