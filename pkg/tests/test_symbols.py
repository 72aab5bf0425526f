import random

import pytest
from hypothesis import given, strategies as st

from cubic_hecke.eisenstein import EisensteinInt, divides, norm, reduce_mod, residues
from cubic_hecke.primes import primary_prime_table
from cubic_hecke.symbols import ray_class_group9, symbol, symbol_exponent, symbol_prime

SMALL = [EisensteinInt(a, b) for a, b, _, _ in primary_prime_table(400).tolist()]
MEDIUM = [EisensteinInt(a, b) for a, b, _, _ in primary_prime_table(20000).tolist()]
coef = st.integers(-10**9, 10**9)
elts = st.builds(EisensteinInt, coef, coef)
small = st.builds(EisensteinInt, st.integers(-10**8, 10**8), st.integers(-10**8, 10**8))  # product stays below 2^62


@pytest.mark.parametrize("pi", SMALL, ids=str)
def test_symbol_is_cube_indicator(pi):
    # oracle: (x/pi) = 1 exactly on the nonzero cubes mod pi
    reps = residues(pi)
    cubes = {reduce_mod(x * x * x, pi) for x in reps if not divides(pi, x)}
    for x in reps:
        e = symbol_exponent(x, pi)
        if divides(pi, x):
            assert e == -1
        else:
            assert (e == 0) == (reduce_mod(x, pi) in cubes)


@given(small, small, st.sampled_from(MEDIUM))
def test_multiplicative(x, y, pi):
    assert symbol(x * y, pi) == symbol(x, pi) * symbol(y, pi)


@given(elts, st.sampled_from(MEDIUM))
def test_agrees_with_euler_criterion(x, pi):
    assert symbol_exponent(x, pi) == symbol_prime(x, pi).code()


@given(elts, st.sampled_from(MEDIUM))
def test_periodic(x, pi):
    assert symbol_exponent(x, pi) == symbol_exponent(x + 7 * pi, pi)


def test_cubic_reciprocity():
    rng = random.Random(5)
    for _ in range(400):
        p1, p2 = rng.sample(MEDIUM, 2)
        if norm(p1) == norm(p2):
            continue
        assert symbol_exponent(p1, p2) == symbol_exponent(p2, p1)


def test_composite_modulus_is_product():
    rng = random.Random(6)
    for _ in range(200):
        p1, p2 = rng.sample(MEDIUM, 2)
        x = EisensteinInt(rng.randint(-999, 999), rng.randint(-999, 999))
        assert symbol(x, p1 * p2) == symbol(x, p1) * symbol(x, p2)


def test_ray_class_group_mod9():
    G = ray_class_group9()
    assert G.order == 9
    one = EisensteinInt(1, 9)  # = 1 mod 9
    assert abs(G.detector(one) - 1) < 1e-12
    assert abs(G.detector(EisensteinInt(4, 3))) < 1e-12
    with pytest.raises(ValueError):
        G.class_of(EisensteinInt(3))
