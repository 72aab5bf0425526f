"""Cubic residue symbols and the ray class group modulo 9.

Two independent routes to (a/n)_3: Euler's criterion in O/pi for prime
moduli, and a gcd-like loop driven by cubic reciprocity that never factors n.
Supplementary laws used by the loop, for primary n = c + d*w:

    (w/n)     = w^((N(n) - 1)/3)
    (1-w / n) = w^(2m),  m = (1 - c)/3
    (-1/n)    = 1

These are pinned against the exponentiation route in the test suite.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .eisenstein import (
    LAMBDA,
    ONE,
    OMEGA,
    OMEGA2,
    UNITS,
    ZERO,
    EisensteinInt,
    congruent_mod,
    divides,
    divrem,
    exact_div,
    norm,
    primary_associate,
    reduce_mod,
    residues,
)

W = cmath.exp(2j * math.pi / 3)
_ROOTS = (1.0 + 0j, W, W.conjugate())


@dataclass(frozen=True, slots=True)
class CubicValue:
    """w^exponent, or 0 when `zero` is set."""

    exponent: int = 0
    zero: bool = False

    @classmethod
    def from_exponent(cls, e: int) -> "CubicValue":
        return ZERO_VALUE if e < 0 else cls(e % 3)

    def __mul__(self, other: "CubicValue") -> "CubicValue":
        if self.zero or other.zero:
            return ZERO_VALUE
        return CubicValue((self.exponent + other.exponent) % 3)

    def conj(self) -> "CubicValue":
        return self if self.zero else CubicValue((-self.exponent) % 3)

    def __complex__(self):
        return 0j if self.zero else _ROOTS[self.exponent]

    def code(self) -> int:
        """Exponent, or -1 for zero."""
        return -1 if self.zero else self.exponent

    def __str__(self):
        if self.zero:
            return "0"
        return ("1", "w", "w^2")[self.exponent]


ZERO_VALUE = CubicValue(0, True)


def _pow_mod(x: EisensteinInt, k: int, m: EisensteinInt) -> EisensteinInt:
    out, base = ONE, reduce_mod(x, m)
    while k:
        if k & 1:
            out = reduce_mod(out * base, m)
        base = reduce_mod(base * base, m)
        k >>= 1
    return out


def symbol_prime(a: EisensteinInt, pi) -> CubicValue:
    """Euler criterion: a^((N(pi)-1)/3) mod pi matched against 1, w, w^2."""
    pi = getattr(pi, "pi", pi)
    n = norm(pi)
    if n % 3 == 0:
        raise ValueError("modulus not coprime to 3")
    if (n - 1) % 3:
        raise ValueError(f"N({pi}) - 1 not divisible by 3: modulus is not a prime")
    if divides(pi, a):
        return ZERO_VALUE
    r = _pow_mod(a, (n - 1) // 3, pi)
    for k, root in enumerate((ONE, OMEGA, OMEGA2)):
        if congruent_mod(r, root, pi):
            return CubicValue(k)
    raise ValueError(f"{pi} is not prime: power residue is not a cube root of unity")


def _unit_exponent(u_index: int, n_norm: int) -> int:
    # UNITS = (1, w, w^2, -1, -w, -w^2); -1 contributes nothing
    j = u_index % 3
    return j * ((n_norm - 1) // 3)


def symbol_exponent(a: EisensteinInt, n: EisensteinInt) -> int:
    """(a/n)_3 as an exponent mod 3, or -1 when a and n are not coprime."""
    nn = norm(n)
    if nn % 3 == 0:
        raise ValueError(f"modulus {n} has norm divisible by 3")
    n = primary_associate(n)
    acc = 0
    while True:
        nn = norm(n)
        if nn == 1:
            return acc % 3
        a = divrem(a, n)[1]
        if a == ZERO:
            return -1
        k = 0
        while (a.a + a.b) % 3 == 0:
            a = exact_div(a, LAMBDA)
            k += 1
        a1 = primary_associate(a)
        u = UNITS.index(exact_div(a, a1))
        acc += _unit_exponent(u, nn) + k * 2 * ((1 - n.a) // 3)
        a, n = n, a1  # cubic reciprocity for coprime primary elements


def symbol(a: EisensteinInt, n: EisensteinInt) -> CubicValue:
    return CubicValue.from_exponent(symbol_exponent(a, n))


# ---------------------------------------------------------------- ray classes mod 9

NINE = EisensteinInt(9, 0)


@dataclass(frozen=True)
class RayClassGroup9:
    order: int
    generators: tuple  # ((EisensteinInt, order), ...)
    characters: tuple  # exponent vectors, one per character
    dlog: dict = field(repr=False)  # canonical primary residue -> exponent vector

    def class_of(self, n: EisensteinInt) -> tuple:
        if norm(n) % 3 == 0:
            raise ValueError("ray class mod 9 needs n coprime to 3")
        return self.dlog[reduce_mod(primary_associate(n), NINE)]

    def char_phase(self, char: tuple, n: EisensteinInt) -> float:
        """psi(n) = e(phase)."""
        vec = self.class_of(n)
        return math.fsum(k * e / o for k, e, (_, o) in zip(char, vec, self.generators)) % 1.0

    def char_value(self, char: tuple, n: EisensteinInt) -> complex:
        return cmath.exp(2j * math.pi * self.char_phase(char, n))

    @property
    def principal(self) -> tuple:
        return tuple(0 for _ in self.generators)

    def detector(self, n: EisensteinInt) -> complex:
        """(1/#h) sum over characters of psi(n)."""
        return sum(self.char_value(c, n) for c in self.characters) / self.order


@lru_cache(maxsize=1)
def ray_class_group9() -> RayClassGroup9:
    units9 = [x for x in residues(NINE) if norm(x) % 3]
    classes = sorted({reduce_mod(primary_associate(x), NINE) for x in units9}, key=lambda z: (z.a, z.b))
    order = len(units9) // len({reduce_mod(u, NINE) for u in UNITS})
    assert order == len(classes)

    def mul(x, y):
        return reduce_mod(x * y, NINE)

    def elt_order(x):
        k, y = 1, x
        while y != ONE:
            y, k = mul(y, x), k + 1
        return k

    def power(x, k):
        y = ONE
        for _ in range(k):
            y = mul(y, x)
        return y

    # smallest generating set giving a bijection from a product of cyclic groups
    basis = None
    for r in range(1, 4):
        for gens in itertools.combinations([c for c in classes if c != ONE], r):
            ords = [elt_order(g) for g in gens]
            if math.prod(ords) != order:
                continue
            image = {}
            for vec in itertools.product(*(range(o) for o in ords)):
                x = ONE
                for g, k in zip(gens, vec):
                    x = mul(x, power(g, k))
                image[x] = vec
            if len(image) == order:
                basis = (tuple(zip(gens, ords)), image)
                break
        if basis:
            break
    gens, dlog = basis
    chars = tuple(itertools.product(*(range(o) for _, o in gens)))
    return RayClassGroup9(order, gens, chars, dlog)
