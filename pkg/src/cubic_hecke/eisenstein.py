"""Exact arithmetic in Z[w], w = exp(2 pi i / 3), in the basis {1, w}.

Elements are immutable pairs (a, b) meaning a + b*w, with w^2 = -1 - w.
Python integers are unbounded, so the fixed-width contract is emulated:
coefficients must stay below 2**62 in absolute value, which keeps every
norm below 2**126.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

COEFF_LIMIT = 1 << 62
ENUMERATION_CAP = 10**7


class InputTooLarge(OverflowError):
    """Coefficient left the exact 128-bit-norm range."""


class ResourceLimit(RuntimeError):
    """An enumeration would exceed the configured cap."""


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    a: int
    b: int = 0

    def __post_init__(self):
        if not (-COEFF_LIMIT < self.a < COEFF_LIMIT and -COEFF_LIMIT < self.b < COEFF_LIMIT):
            raise InputTooLarge(f"coefficients of {self.a}+{self.b}*w exceed 2^62")

    # ring operations
    def __add__(self, o):
        o = _lift(o)
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = _lift(o)
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return _lift(o) - self

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, o):
        o = _lift(o)
        a, b, c, d = self.a, self.b, o.a, o.b
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "EisensteinInt":
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return norm(self)

    def is_unit(self) -> bool:
        return norm(self) == 1

    def __complex__(self):
        return complex(self.a - 0.5 * self.b, self.b * 0.8660254037844386)

    def __str__(self):
        return format_eis(self)

    def __repr__(self):
        return f"EisensteinInt({self.a}, {self.b})"


def _lift(x) -> EisensteinInt:
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x, 0)
    return NotImplemented


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)
LAMBDA = EisensteinInt(1, -1)  # 1 - w, the prime above 3
UNITS = (ONE, OMEGA, OMEGA2, -ONE, -OMEGA, -OMEGA2)


def norm(z: EisensteinInt) -> int:
    n = z.a * z.a - z.a * z.b + z.b * z.b
    if n >= 1 << 126:
        raise InputTooLarge("norm exceeds 2^126")
    return n


def divrem(x: EisensteinInt, y: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Nearest-lattice-point division: x = q*y + r with N(r) < N(y)."""
    n = norm(y)
    if n == 0:
        raise ZeroDivisionError("divrem by zero")
    t = x * y.conj()  # x/y = t/n
    best = None
    for qa in (t.a // n, t.a // n + 1):
        for qb in (t.b // n, t.b // n + 1):
            u, v = t.a - qa * n, t.b - qb * n
            key = (u * u - u * v + v * v, qa, qb)
            if best is None or key < best:
                best = key
    q = EisensteinInt(best[1], best[2])
    return q, x - q * y


def divides(m: EisensteinInt, z: EisensteinInt) -> bool:
    n = norm(m)
    if n == 0:
        return z == ZERO
    t = z * m.conj()
    return t.a % n == 0 and t.b % n == 0


def exact_div(z: EisensteinInt, m: EisensteinInt) -> EisensteinInt:
    n = norm(m)
    t = z * m.conj()
    if t.a % n or t.b % n:
        raise ValueError(f"{m} does not divide {z}")
    return EisensteinInt(t.a // n, t.b // n)


def congruent_mod(z: EisensteinInt, w: EisensteinInt, m: EisensteinInt) -> bool:
    if m == ZERO:
        raise ZeroDivisionError("modulus zero")
    return divides(m, z - w)


def is_primary(z: EisensteinInt) -> bool:
    return z.a % 3 == 1 and z.b % 3 == 0


def primary_associate(z: EisensteinInt) -> EisensteinInt:
    if norm(z) % 3 == 0:
        raise ValueError(f"{z} has norm divisible by 3; no primary associate")
    for u in UNITS:
        c = u * z
        if is_primary(c):
            return c
    raise AssertionError("unreachable: some associate is primary")


def sector_associate(z: EisensteinInt) -> EisensteinInt:
    """Unique associate with a > b >= 0, i.e. argument in [0, 60 degrees)."""
    if z == ZERO:
        return z
    for u in UNITS:
        c = u * z
        if c.a > c.b >= 0:
            return c
    raise AssertionError("unreachable")


def normalize(z: EisensteinInt) -> EisensteinInt:
    if z == ZERO:
        return z
    return primary_associate(z) if norm(z) % 3 else sector_associate(z)


def gcd(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    if x == ZERO and y == ZERO:
        raise ValueError("gcd(0, 0) is undefined")
    while y != ZERO:
        x, y = y, divrem(x, y)[1]
    return normalize(x)


def unit_index(u: EisensteinInt) -> int:
    """Position of a unit in UNITS."""
    return UNITS.index(u)


@dataclass(frozen=True)
class ResidueSystem:
    modulus: EisensteinInt
    representatives: tuple

    def __len__(self):
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)


def _lattice_basis(m: EisensteinInt) -> tuple[int, int, int]:
    """(g, c, d1) with mO spanned by (d1, 0) and (c, g) in coordinates (a, b)."""
    a, b = m.a, m.b
    n = norm(m)
    # mO is spanned by m = (a, b) and m*w = (-b, a - b); find a combination with b-coordinate g
    g, i, j = _ext_gcd(b, a - b)
    if g < 0:
        g, i, j = -g, -i, -j
    if g == 0:  # cannot happen for m != 0
        raise ZeroDivisionError
    e2 = EisensteinInt(i, 0) * m + EisensteinInt(j, 0) * (m * OMEGA)
    assert e2.b == g and g == math.gcd(a, b)
    return g, e2.a, n // g


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    if y == 0:
        return x, 1, 0
    g, s, t = _ext_gcd(y, x % y)
    return g, t, s - (x // y) * t


def reduce_mod(z: EisensteinInt, m: EisensteinInt) -> EisensteinInt:
    """Canonical representative x + y*w with 0 <= y < g, 0 <= x < N(m)/g."""
    g, c, d1 = _lattice_basis(m)
    k = z.b // g
    x = (z.a - k * c) % d1
    return EisensteinInt(x, z.b - k * g)


def residues(m: EisensteinInt, cap: int = ENUMERATION_CAP) -> ResidueSystem:
    if m == ZERO:
        raise ZeroDivisionError("modulus zero")
    n = norm(m)
    if n > cap:
        raise ResourceLimit(f"residue system of size {n} exceeds cap {cap}")
    g, _, d1 = _lattice_basis(m)
    reps = tuple(EisensteinInt(x, y) for x in range(d1) for y in range(g))
    return ResidueSystem(m, reps)


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(\*?\s*w)?\s*")


def parse_eis(text: str) -> EisensteinInt:
    """Parse forms like '-2-3*w', '17', 'w', '1+9w'."""
    s = text.replace(" ", "").lower()
    if not s:
        raise ValueError("empty element")
    a = b = 0
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r}")
        sign, digits, wpart = m.groups()
        if not digits and not wpart:
            raise ValueError(f"cannot parse {text!r}")
        if pos > 0 and not sign:
            raise ValueError(f"cannot parse {text!r}")
        val = int(digits) if digits else 1
        if sign == "-":
            val = -val
        if wpart:
            b += val
        else:
            a += val
        pos = m.end()
    return EisensteinInt(a, b)


def format_eis(z: EisensteinInt) -> str:
    if z.b == 0:
        return str(z.a)
    if z.a == 0:
        return f"{z.b}*w"
    return f"{z.a}{'+' if z.b > 0 else '-'}{abs(z.b)}*w"
