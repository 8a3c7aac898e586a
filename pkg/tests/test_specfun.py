import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special

from frwtk.errors import DomainError
from frwtk.specfun import gamma, hyp1f1, hyp1f1_series


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 1.5, 2.5, 7.3, 20.0, 120.0])
def test_gamma_matches_scipy(x):
    assert gamma(x) == pytest.approx(special.gamma(x), rel=1e-13)


@pytest.mark.parametrize("n", range(1, 15))
def test_gamma_factorials(n):
    assert gamma(n) == pytest.approx(math.factorial(n - 1), rel=1e-14)


def test_gamma_integer_prefactors():
    assert (gamma(4.0), gamma(3.0), gamma(2.0)) == pytest.approx((6.0, 2.0, 1.0), rel=1e-14)


@given(st.floats(1e-3, 9.99))
def test_gamma_recurrence(x):
    assert abs(gamma(x + 1) - x * gamma(x)) <= 1e-12 * abs(x * gamma(x))


@pytest.mark.parametrize("x", [0.0, -1.0, float("nan"), float("inf")])
def test_gamma_domain(x):
    with pytest.raises(DomainError):
        gamma(x)


@pytest.mark.parametrize("a,b", [(0.5, 1.5), (1.25, 0.5), (1.75, 1.5), (-1.5, 2.5), (3.0, 0.5)])
@pytest.mark.parametrize("x", np.linspace(-10, 10, 21))
def test_hyp1f1_matches_scipy(a, b, x):
    assert hyp1f1(a, b, x) == pytest.approx(special.hyp1f1(a, b, x), rel=1e-10, abs=1e-14)


@given(st.floats(-10, 10))
def test_hyp1f1_identities(x):
    assert abs(hyp1f1(1, 1, x) - math.exp(x)) <= 1e-10 * math.exp(x)
    if abs(x) > 1e-12:
        ref = math.expm1(x) / x
        assert abs(hyp1f1(1, 2, x) - ref) <= 1e-10 * ref


@given(st.floats(0.1, 3), st.floats(0.2, 3), st.floats(-10, 10))
def test_kummer_path_agrees_with_raw_series(a, b, x):
    ref = hyp1f1_series(a, b, x)
    assert abs(hyp1f1(a, b, x) - ref) <= 1e-8 * max(1.0, abs(ref))


@pytest.mark.parametrize("rho", [0.5, 1.0, 2.0])
def test_reduction_argument_keeps_value_in_unit_disc(rho):
    for x in np.linspace(-40, 0, 161):
        assert abs(hyp1f1(1 + rho / 2, 0.5, x)) <= 1.0 + 1e-14


@pytest.mark.parametrize("z", [-2 + 1j, 1.5 - 0.5j, -4.1 - 2j, 0.3j])
def test_complex_argument(z):
    assert abs(hyp1f1(1.25, 0.5, z) - special.hyp1f1(1.25, 0.5, z)) < 1e-11 * max(
        1, abs(special.hyp1f1(1.25, 0.5, z)))


def test_bad_b():
    with pytest.raises(DomainError):
        hyp1f1(1.0, -2.0, 0.5)
