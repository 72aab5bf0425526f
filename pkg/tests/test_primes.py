import math

import numpy as np
import pytest

from cubic_hecke.eisenstein import EisensteinInt, UNITS, norm
from cubic_hecke.primes import (
    chebyshev_family, family_array, family_from_csv, family_to_csv, is_rational_prime,
    primary_prime_table, sieve_family, split_rational_prime,
)


def _isprime(n):
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))


def brute_family(X, split_only=False):
    """Elements = 1 mod 9 (a = 1, b = 0 mod 9) that are prime, by trial division on the norm."""
    out = set()
    r = math.isqrt(4 * X // 3) + 2
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            if (a - 1) % 9 or b % 9:
                continue
            n = a * a - a * b + b * b
            if n > X:
                continue
            if _isprime(n):
                out.add((a, b))
            elif not split_only and b == 0 and _isprime(abs(a)) and abs(a) % 3 == 2:
                out.add((a, b))
    return out


@pytest.mark.parametrize("X", [500, 5000, 30000])
def test_family_matches_brute_force(X):
    got = {(p.pi.a, p.pi.b) for p in sieve_family(X)}
    assert got == brute_family(X)
    got_split = {(p.pi.a, p.pi.b) for p in sieve_family(X, split_only=True)}
    assert got_split == brute_family(X, split_only=True)


def test_family_head_and_order():
    fam = sieve_family(400)
    assert [(p.pi.a, p.pi.b) for p in fam[:5]] == [(-8, -9), (1, 9), (10, -9), (19, 9), (-17, 0)]
    keys = [(p.norm, p.pi.a, p.pi.b) for p in fam]
    assert keys == sorted(keys)
    assert fam[4].splitting == "inert" and fam[4].norm == 289


def test_csv_roundtrip():
    rows = family_array(2000)
    text = family_to_csv(rows)
    assert text.splitlines()[0] == "a,b,norm,splitting"
    assert np.array_equal(family_from_csv(text), rows)


def test_primary_table_against_norms():
    tab = primary_prime_table(3000)
    for a, b, n, _ in tab.tolist():
        assert a * a - a * b + b * b == n
        assert a % 3 == 1 and b % 3 == 0
    ps = {p for p in range(2, 3001) if _isprime(p) and p % 3 == 1}
    assert {n for _, b, n, _ in tab.tolist() if b != 0} == ps


@pytest.mark.parametrize("p", [7, 13, 19, 73, 1000003])
def test_split_rational_prime(p):
    pp = split_rational_prime(p)
    assert pp.norm == p and pp.pi.b > 0
    assert pp.pi.a % 3 == 1 and pp.pi.b % 3 == 0


def test_is_rational_prime_agrees_with_trial_division():
    assert [n for n in range(2000) if is_rational_prime(n)] == [n for n in range(2000) if _isprime(n)]


def test_chebyshev_family_density():
    # theta_family(y) ~ y/9; improvement with y
    d = [abs(9 * chebyshev_family(y) / y - 1) for y in (1e4, 1e5)]
    assert d[1] < 0.1
