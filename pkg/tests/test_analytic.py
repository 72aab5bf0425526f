import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from cubic_hecke.analytic import (
    BUMP, central_diff, digamma_c, dirichlet_L3, error_exponent, fejer_pair, gamma_c, integrate_even,
    loggamma_c, zeta, zeta_K, zeta_K_j, zeta_K_j_logderiv_exact,
)

re_ = st.floats(-4.5, 6, allow_nan=False)
im_ = st.floats(-60, 60, allow_nan=False)


@given(re_, im_)
def test_gamma_recurrence(x, y):
    s = complex(x, y)
    if min(abs(s - k) for k in range(-6, 1)) < 1e-3:
        return
    assert abs(loggamma_c(s + 1) - loggamma_c(s) - np.log(s)) % (2 * math.pi) < 1e-10 or \
        abs(abs(loggamma_c(s + 1) - loggamma_c(s) - np.log(s)) - 2 * math.pi) < 1e-10
    g0, g1 = gamma_c(s), gamma_c(s + 1)
    if abs(g0) > 1e-280:
        assert abs(g1 - s * g0) <= 1e-10 * abs(g1)


@given(re_, im_)
def test_digamma_recurrence(x, y):
    s = complex(x, y)
    if min(abs(s - k) for k in range(-6, 1)) < 1e-3:
        return
    assert abs(digamma_c(s + 1) - digamma_c(s) - 1 / s) < 1e-10 * (1 + abs(digamma_c(s)))


def test_L3_known_value():
    # L(2, chi_-3), a classical constant
    assert abs(dirichlet_L3(2) - 0.78130241289648629686) < 1e-14


def test_zeta_K_three_paths():
    for s in (2.0, 3.5, 2 + 5j):
        f = zeta_K(s)
        assert abs(f - zeta_K(s, "epstein")) < 1e-12 * abs(f)
        assert abs(f - zeta_K(s, "euler", cutoff=10**6)) < 1e-5 * abs(f)
    for s in (0.5 + 14j, -0.5 + 3j):
        assert abs(zeta_K(s) - zeta_K(s, "epstein")) < 1e-10 * (1 + abs(zeta_K(s)))


def test_zeta_K_residue_at_one():
    eps = 1e-7
    assert abs(eps * zeta_K(1 + eps).real - math.pi / (3 * math.sqrt(3))) < 1e-6
    with pytest.raises(ValueError):
        zeta_K(1)


def test_zeta_K_j_logderiv_two_ways():
    for s in (1.5, 1.95 + 0.3j, 2.85):
        fd, gap = central_diff(zeta_K_j, s)
        exact = zeta_K_j_logderiv_exact(s)
        assert abs(fd / zeta_K_j(s) - exact) < 1e-7
        assert gap < 1e-6


def test_mellin_of_bump():
    for s in (1, 2, 0.5 + 3j, 2 + 40j):
        ref = complex(mpmath.quad(lambda t: BUMP(float(t)) * t ** (s - 1), [1, 1.5, 2]))
        assert abs(BUMP.mellin(s) - ref) < 1e-11
    s = np.array([1, 2 + 40j, 2 - 300j])
    got = BUMP.mellin_many(s)
    assert max(abs(got[i] - BUMP.mellin(s[i])) for i in range(3)) < 1e-11


@given(st.floats(0.5, 20))
def test_mellin_scales_linearly(c):
    assert abs(BUMP.scaled(c).mellin(1) - c * BUMP.mellin(1)) < 1e-12 * c


@pytest.mark.parametrize("a", [0.25, 0.5, 1.0])
def test_fejer_pair(a):
    h = fejer_pair(a)
    assert h(0.0) == 1.0
    total = integrate_even(lambda x: h(x), 1 / a, periods=4000, tail=lambda X: 1 / (2 * math.pi**2 * a**2 * X))
    assert abs(total - h.integral) < 1e-6
    assert abs(h.integral - 1 / a) < 1e-15
    # hat h(0) = int h
    assert abs(float(h.fourier(0.0)) - h.integral) < 1e-15


def test_error_exponent_examples():
    assert abs(error_exponent(0.2, 0.2).E - 0.8) < 1e-12
    assert abs(error_exponent(0).E - 12 / 13) < 1e-12
    assert error_exponent(-0.01).delta == 2 / 11


def test_rational_zeta():
    assert abs(zeta(2) - math.pi**2 / 6) < 1e-14
