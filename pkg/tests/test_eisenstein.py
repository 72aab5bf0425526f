import pytest
from hypothesis import given, strategies as st

from cubic_hecke.eisenstein import (
    ONE, UNITS, ZERO, EisensteinInt, InputTooLarge, divrem, divides, format_eis, gcd,
    is_primary, norm, parse_eis, primary_associate, reduce_mod, residues, sector_associate,
)

coef = st.integers(-10**6, 10**6)
elts = st.builds(EisensteinInt, coef, coef)
nonzero = elts.filter(lambda z: z != ZERO)


def as_complex(z):
    return complex(z)


@given(elts, elts)
def test_product_matches_complex_embedding(x, y):
    assert abs(complex(x * y) - complex(x) * complex(y)) <= 1e-9 * (1 + abs(complex(x)) * abs(complex(y)))


@given(elts, elts, elts)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(elts, elts)
def test_norm_multiplicative(x, y):
    assert norm(x * y) == norm(x) * norm(y)
    assert norm(x) == x.a * x.a - x.a * x.b + x.b * x.b
    assert x * x.conj() == EisensteinInt(norm(x))


@given(elts, nonzero)
def test_division_with_remainder(x, y):
    q, r = divrem(x, y)
    assert q * y + r == x
    assert norm(r) < norm(y)


@given(nonzero, nonzero)
def test_gcd_divides_both(x, y):
    g = gcd(x, y)
    assert divides(g, x) and divides(g, y)


@given(nonzero.filter(lambda z: norm(z) % 3))
def test_primary_associate_unique(z):
    prim = [u * z for u in UNITS if is_primary(u * z)]
    assert len(prim) == 1
    assert primary_associate(z) == prim[0]


@given(nonzero)
def test_sector_associate_unique(z):
    cands = [u * z for u in UNITS if (u * z).a > (u * z).b >= 0]
    assert len(cands) == 1
    assert sector_associate(z) == cands[0]


@given(elts)
def test_parse_format_roundtrip(z):
    assert parse_eis(format_eis(z)) == z


def test_parse_examples():
    assert parse_eis("1+9w") == EisensteinInt(1, 9)
    assert parse_eis("-8-9*w") == EisensteinInt(-8, -9)
    assert parse_eis("w") == EisensteinInt(0, 1)
    assert parse_eis("-17") == EisensteinInt(-17, 0)
    with pytest.raises(ValueError):
        parse_eis("1+9i")


def test_overflow_guard():
    with pytest.raises(InputTooLarge):
        EisensteinInt(1 << 62, 0)


@pytest.mark.parametrize("m", [EisensteinInt(9), EisensteinInt(1, 9), EisensteinInt(2, -3), EisensteinInt(7)])
def test_residue_system_complete(m):
    reps = residues(m)
    assert len(reps) == norm(m)
    assert len({reduce_mod(x, m) for x in reps}) == norm(m)


def test_units():
    assert all(norm(u) == 1 for u in UNITS) and len(set(UNITS)) == 6
    assert ONE in UNITS
