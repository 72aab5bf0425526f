import math
import random

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from cubic_hecke.eisenstein import EisensteinInt, ResourceLimit, norm
from cubic_hecke.lfunctions import (
    IllConditionedError, TailBoundError, _log_gamma_factor, _parse_zero_csv, completed_L, euler_L,
    find_zeros, hecke_L, log_deriv, log_deriv_direct, make_handle, zero_count, zero_csv,
)
from cubic_hecke.primes import sieve_family
from cubic_hecke.symbols import symbol_exponent

ROOTS = np.array([1, complex(-0.5, math.sqrt(3) / 2), complex(-0.5, -math.sqrt(3) / 2)])
FAMILY = sieve_family(5000)
SPLIT = [p for p in FAMILY if p.splitting == "split"]


def naive_K(pi, s, M):
    """sum over ideals a (generator with a > b >= 0) of (gen/pi)_3 N(a)^-s."""
    total = 0j
    r = math.isqrt(4 * M // 3) + 2
    for a in range(1, r):
        for b in range(0, a):
            n = a * a - a * b + b * b
            if n > M:
                continue
            e = symbol_exponent(EisensteinInt(a, b), pi)
            if e >= 0:
                total += ROOTS[e] * n ** (-s)
    return total


def naive_Q(pi, s, M):
    return sum(ROOTS[e] * n ** (-s) for n in range(1, M + 1) if (e := symbol_exponent(EisensteinInt(n), pi)) >= 0)


@pytest.fixture(scope="module")
def handles():
    return [make_handle(p.pi) for p in FAMILY[:6]]


@pytest.mark.parametrize("k", range(4))
def test_K_side_against_naive_sum(k):
    pi = FAMILY[k].pi
    h = make_handle(pi)
    s = 4.0 + 1.5j
    ref = naive_K(pi, s, 3000)
    assert abs(hecke_L(h, s, "direct", cutoff=3000) - ref) < 1e-12
    assert abs(hecke_L(h, s, "reflected") - ref) < 1e-9


@pytest.mark.parametrize("k", range(3))
def test_Q_side_against_naive_sum(k):
    pi = SPLIT[k].pi
    h = make_handle(pi, "Q")
    s = 4.0 - 2j
    ref = naive_Q(pi, s, 20000)
    assert abs(hecke_L(h, s, "reflected") - ref) < 1e-9


def test_three_paths_at_two(handles):
    for h in handles[:3]:
        d = hecke_L(h, 2.0, "direct", cutoff=10**6)
        e = euler_L(h, 2.0, 10**6)
        r = hecke_L(h, 2.0, "reflected")
        assert abs(d - r) < 1e-8 and abs(e - r) < 1e-6


def test_direct_mode_refuses_unreachable_tolerance(handles):
    with pytest.raises(TailBoundError):
        hecke_L(handles[0], 2.0, "direct")


@given(st.floats(-1, 2), st.floats(-45, 45), st.integers(0, 5))
def test_functional_equation(x, y, k):
    h = make_handle(FAMILY[k].pi)
    s = complex(x, y)
    assume(min(abs(z + k) for z in (s, 1 - s) for k in range(4)) > 1e-3)  # gamma-factor poles
    lhs = completed_L(h, s, A=1.3)
    rhs = h.root_number * completed_L(h.bar(), 1 - s, A=0.8)
    scale = max(abs(np.exp(_log_gamma_factor(h, s))), abs(np.exp(_log_gamma_factor(h, 1 - s))))
    assert abs(lhs - rhs) < 1e-8 * scale


@given(st.floats(-1, 2), st.floats(-40, 40), st.integers(0, 3))
def test_Q_functional_equation(x, y, k):
    h = make_handle(SPLIT[k].pi, "Q")
    s = complex(x, y)
    assume(min(abs(z + k) for z in (s, 1 - s) for k in range(4)) > 1e-3)  # gamma-factor poles
    lhs = completed_L(h, s, A=1.3)
    rhs = h.root_number * completed_L(h.bar(), 1 - s, A=0.8)
    scale = max(abs(np.exp(_log_gamma_factor(h, s))), abs(np.exp(_log_gamma_factor(h, 1 - s))))
    assert abs(lhs - rhs) < 1e-8 * scale


@given(st.floats(0.3, 2), st.floats(-30, 30), st.integers(0, 5))
def test_conjugate_symmetry(x, y, k):
    h = make_handle(FAMILY[k].pi)
    s = complex(x, y)
    assert abs(hecke_L(h.bar(), s.conjugate()) - hecke_L(h, s).conjugate()) < 1e-9 * (1 + abs(hecke_L(h, s)))


def test_conjugate_prime_gives_conjugate_character():
    p = SPLIT[0]
    h, hc = make_handle(p.pi), make_handle(p.conjugate.pi)
    for s in (0.5 + 3j, 2.0, 0.7 - 11j):
        assert abs(hecke_L(hc, s) - hecke_L(h.bar(), s)) < 1e-9


def test_root_numbers(handles):
    for h in handles:
        assert abs(abs(h.root_number) - 1) < 1e-12
        assert abs(h.bar().root_number - h.root_number.conjugate()) < 1e-15


def test_log_deriv_paths(handles):
    h = handles[1]
    assert abs(log_deriv(h, 2.0 + 1j) - log_deriv_direct(h, 2.0 + 1j, 10**6)) < 1e-8
    for s in (0.8 + 0.3j, 0.95, 0.5 + 7j):
        step = 1e-4
        fd = (hecke_L(h, s + step) - hecke_L(h, s - step)) / (2 * step) / hecke_L(h, s)
        assert abs(fd - log_deriv(h, s)) < 1e-4


def test_log_deriv_guard_near_zero(handles):
    h = handles[0]
    gamma = find_zeros(h, 10).ordinates[0]
    with pytest.raises(IllConditionedError):
        log_deriv(h, complex(0.5, gamma))


def test_zero_counts_and_mirror(handles):
    for h in handles[:3]:
        zl = find_zeros(h, 15)
        assert len(zl) == zl.verified_count == round(zero_count(h, zl.height))
        zb = find_zeros(h.bar(), 15)
        assert np.allclose(np.sort(-np.asarray(zb.ordinates)), np.sort(zl.ordinates), atol=1e-9)
        for g in zl.ordinates:
            assert abs(hecke_L(h, complex(0.5, g))) < 1e-8


def test_no_zero_below_lowest(handles):
    h = handles[2]
    zl = find_zeros(h, 20)
    low = min(abs(g) for g in zl.ordinates)
    assert len(find_zeros(h, 0.9 * low)) == 0


def test_zero_csv_roundtrip(handles):
    zl = find_zeros(handles[0], 8)
    back = _parse_zero_csv(zero_csv(zl), 8)
    assert np.allclose(back.ordinates, zl.ordinates, rtol=0, atol=0)
    assert back.verified_count == zl.verified_count


def test_preconditions():
    with pytest.raises(ValueError):
        make_handle(EisensteinInt(1, 3))  # norm 7, not 1 mod 9
    with pytest.raises(ValueError):
        make_handle(EisensteinInt(-17), "Q")  # inert
    with pytest.raises(ValueError):
        make_handle(EisensteinInt(4, 9))  # not prime
    with pytest.raises(ValueError):
        find_zeros(make_handle(FAMILY[0].pi), 80)


@pytest.mark.parametrize("a,delta", [(0.25 + 7j, 1.2), (1.5 - 20j, -1.4), (0.75, 0.0), (-0.5 + 30j, 1.5)])
def test_incomplete_gamma_kernel_against_mpmath(a, delta):
    import mpmath

    from cubic_hecke import _kernels as K
    from cubic_hecke.lfunctions import _ray_cutoff

    radii = np.array([0.01, 0.3, 1.0, 4.0, 15.0])
    rmax = _ray_cutoff(a.real if isinstance(a, complex) else a, math.cos(delta))
    G, dG = K.upper_gamma_ray(complex(a), radii, delta, rmax, True)
    for r, g, dg in zip(radii, G, dG):
        x = r * complex(math.cos(delta), math.sin(delta))
        ref = complex(mpmath.gammainc(a, x))
        dref = complex(mpmath.diff(lambda t: mpmath.gammainc(t, x), a))
        assert abs(g - ref) < 1e-11 * max(1.0, abs(ref))
        assert abs(dg - dref) < 1e-8 * max(1.0, abs(dref))
