import cmath
import math

import pytest
from hypothesis import given, strategies as st

from cubic_hecke.eisenstein import ONE, EisensteinInt, divides, norm, residues
from cubic_hecke.gauss import (
    cancellation_exponent, e_K, gauss_inert, gauss_prime, gauss_sum, gauss_table, h_partial,
    tau_split_direct, tau_split_fast,
)
from cubic_hecke.primes import family_array, primary_prime_table, sieve_family
from cubic_hecke.symbols import W, symbol_exponent

ROOTS = (1, W, W.conjugate())


def direct_e(x, n):
    z = complex(x) / complex(n)
    # e_K(x/n) = exp(2 pi i (z/sqrt(-3) - conj(z)/sqrt(-3)))
    sd = complex(0, math.sqrt(3))
    return cmath.exp(2j * math.pi * (z / sd - z.conjugate() / sd))


PRIMES = [EisensteinInt(a, b) for a, b, _, _ in primary_prime_table(1500).tolist()]


@pytest.mark.parametrize("pi", PRIMES[::7], ids=str)
def test_gauss_sum_against_literal_sum(pi):
    lit = sum(ROOTS[symbol_exponent(x, pi)] * direct_e(x, pi) for x in residues(pi) if not divides(pi, x))
    assert abs(gauss_sum(ONE, pi).value - lit) < 1e-9 * math.sqrt(norm(pi))


@pytest.mark.parametrize("pi", PRIMES, ids=str)
def test_magnitude_and_fast_path(pi):
    g = gauss_sum(ONE, pi).value
    assert abs(abs(g) ** 2 - norm(pi)) < 1e-8 * norm(pi)
    assert abs(gauss_prime(pi) - g) < 1e-8 * math.sqrt(norm(pi))


def test_e_K_additive_character():
    n = EisensteinInt(1, 9)
    for x, y in [(EisensteinInt(3, 4), EisensteinInt(-2, 7)), (EisensteinInt(10, 1), EisensteinInt(5, 5))]:
        assert abs(e_K(x + y, n) - e_K(x, n) * e_K(y, n)) < 1e-12
        assert abs(e_K(x + n, n) - e_K(x, n)) < 1e-12


@given(st.integers(-60, 60), st.integers(-60, 60), st.sampled_from(PRIMES[:40]))
def test_twisting(a, b, pi):
    k = EisensteinInt(a, b)
    e = symbol_exponent(k, pi)
    g1 = gauss_sum(ONE, pi).value
    gk = gauss_sum(k, pi).value
    if e < 0:
        assert abs(gk) < 1e-8 * math.sqrt(norm(pi))
    else:
        assert abs(gk - ROOTS[(-e) % 3] * g1) < 1e-8 * math.sqrt(norm(pi))


def test_tau_split_paths_and_identity():
    for p in sieve_family(5000, split_only=True):
        t = tau_split_direct(p.pi)
        assert abs(t - tau_split_fast(p.pi)) < 1e-8
        # the induced Dirichlet character has the same Gauss sum (chi_pi(b) = 1 on the family)
        assert abs(t - gauss_sum(ONE, p.pi).value) < 1e-8


@pytest.mark.parametrize("q", [17, 53, 71, 89])
def test_inert_gauss(q):
    assert abs(gauss_inert(q) - gauss_sum(ONE, EisensteinInt(-q)).value) < 1e-8 * q


def test_table_matches_pointwise():
    rows = family_array(3000)
    g = gauss_table(rows)
    for (a, b, _, _), gv in zip(rows.tolist(), g):
        assert abs(gv - gauss_sum(ONE, EisensteinInt(a, b)).value) < 1e-8 * 60


def test_composite_modulus_gauss_sum_multiplicativity():
    # |g|^2 = N still holds for a squarefree product of distinct primes
    p1, p2 = PRIMES[3], PRIMES[10]
    g = gauss_sum(ONE, p1 * p2).value
    assert abs(abs(g) ** 2 - norm(p1) * norm(p2)) < 1e-6 * norm(p1 * p2)


def test_partial_sums_cancel():
    slope, *_ = cancellation_exponent(ONE, 0.5, 1e3, 1e5, points=12)
    assert slope < 0.95
    assert math.isfinite(abs(h_partial(ONE, 0.5, None, 2e3)))
