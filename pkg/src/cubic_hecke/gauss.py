"""The additive character e_K, cubic Gauss sums and partial sums of h(r, s; psi).

e_K(z) = exp(2 pi i (z/sqrt(-3) - conj(z)/sqrt(-3))).  With sqrt(-3) = 1 + 2w,
writing z = u + v w gives z - conj(z) = v sqrt(-3), so e_K(z) = e(v): only
the w-coefficient of z matters, and it can be reduced mod 1 exactly.

Batch engine for a split prime pi of norm p: summing over rational residues,
g(1, pi) = conj(chi)(b) tau(chi) with pi = a + b w and tau the Gauss sum of
the induced Dirichlet character.  tau is fixed by tau^3 = -p pi up to a cube
root of unity, and the root is picked out by Re tau = (S + 1)/2, where
S = sum_y e(y^3/p) is a real cubic period sum computed in O(p).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels as K
from . import cache
from .eisenstein import (
    EisensteinInt,
    ZERO,
    ENUMERATION_CAP,
    divides,
    norm,
    primary_associate,
    residues,
)
from .primes import PrimaryPrime, is_rational_prime, primary_prime_table
from .symbols import W, ray_class_group9, symbol_exponent

_ROOTS = np.array([1.0 + 0j, W, W.conjugate()])


@dataclass(frozen=True)
class GaussSumValue:
    value: complex
    modulus_norm: int

    def __complex__(self):
        return self.value


def omega_coefficient(x: EisensteinInt, q: EisensteinInt) -> Fraction:
    """v in Q with x/q = u + v w, reduced to [0, 1)."""
    n = norm(q)
    if n == 0:
        raise ZeroDivisionError("e_K of x/0")
    t = x * q.conj()
    return Fraction(t.b % n, n)


def e_K(x: EisensteinInt, q: EisensteinInt) -> complex:
    v = omega_coefficient(x, q)
    return cmath.exp(2j * math.pi * v.numerator / v.denominator)


def e_K_direct(z: complex) -> complex:
    """The defining display evaluated in floating point."""
    sd = 1j * math.sqrt(3.0)
    return cmath.exp(2j * math.pi * (z / sd - z.conjugate() / sd))


def _fsum_complex(vals: np.ndarray) -> complex:
    return complex(math.fsum(vals.real.tolist()), math.fsum(vals.imag.tolist()))


def w_mod_prime(pi: EisensteinInt, p: int) -> int:
    """r in Z/p with w = r mod pi, for pi split of norm p."""
    return (-pi.a * pow(pi.b, -1, p)) % p


def _character_exponents(reps: list, n: EisensteinInt) -> np.ndarray:
    N = norm(n)
    if is_rational_prime(N) and N % 3 == 1:
        # Euler criterion on rational residues 0..p-1
        r = w_mod_prime(n, N)
        ex = K.rational_exponents(N - 1, N, r)
        assert (ex >= -1).all()
        return ex[[z.a for z in reps]]
    return np.array([symbol_exponent(z, n) for z in reps], dtype=np.int64)


def gauss_sum(k: EisensteinInt, n: EisensteinInt, cap: int = ENUMERATION_CAP) -> GaussSumValue:
    """sum over x mod n of (x/n)_3 e_K(k x / n), compensated, in residue order."""
    N = norm(n)
    if N % 3 == 0:
        raise ValueError(f"modulus {n} not coprime to 3")
    rs = residues(n, cap)
    reps = list(rs)
    ex = _character_exponents(reps, n)
    kb = k * n.conj()
    xa = np.array([z.a for z in reps], dtype=object)
    xb = np.array([z.b for z in reps], dtype=object)
    # w-coefficient of x * (k conj(n)) over N, reduced exactly
    v = (xa * kb.b + xb * kb.a - xb * kb.b) % N
    phase = np.array(v.tolist(), dtype=np.float64) / N
    terms = np.exp(2j * math.pi * phase)
    mask = ex >= 0
    vals = np.where(mask, _ROOTS[np.where(mask, ex, 0)], 0) * terms
    return GaussSumValue(_fsum_complex(vals), N)


# ----------------------------------------------------------------- batch engine


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    fs = _prime_factors(p - 1)
    g = 2
    while any(pow(g, (p - 1) // f, p) == 1 for f in fs):
        g += 1
    return g


def tau_split_direct(pi: EisensteinInt) -> complex:
    """tau(chi_pi) = sum_x chi_pi(x) e(x/p) by one pass over a primitive-root walk."""
    p = norm(pi)
    r = w_mod_prime(pi, p)
    g = primitive_root(p)
    t = pow(g, (p - 1) // 3, p)
    c = 1 if t == r else 2
    bins = K.coset_bins(p, g, 1)
    return complex(bins[0] + _ROOTS[c] * bins[1] + _ROOTS[(2 * c) % 3] * bins[2])


def tau_split_fast(pi: EisensteinInt) -> complex:
    p = norm(pi)
    S = K.cubic_period_sum(p)
    re_tau = (S + 1.0) / 2.0
    base = (-p * complex(pi)) ** (1.0 / 3.0)
    cands = [base * _ROOTS[k] for k in range(3)]
    dist = sorted((abs(c.real - re_tau), i) for i, c in enumerate(cands))
    if dist[1][0] - dist[0][0] < 1e-6 * math.sqrt(p):
        return tau_split_direct(pi)  # ambiguous root: fall back to the full sum
    return cands[dist[0][1]]


def _f_q2_generator(q: int) -> tuple[int, int]:
    n = q * q - 1
    fs = _prime_factors(n)

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % q, (x[0] * y[1] + x[1] * y[0] - x[1] * y[1]) % q)

    def pw(x, k):
        out = (1, 0)
        while k:
            if k & 1:
                out = mul(out, x)
            x = mul(x, x)
            k >>= 1
        return out

    for gx in range(q):
        for gy in range(1, q):
            if all(pw((gx, gy), n // f) != (1, 0) for f in fs):
                return gx, gy
    raise AssertionError("no generator")


def gauss_inert(q: int) -> complex:
    """g(1, -q) for an inert rational prime q = 2 mod 3."""
    gx, gy = _f_q2_generator(q)
    # chi(gamma) = gamma^((q^2-1)/3) reduced to w or w^2
    n = q * q - 1
    x, y, k = 1, 0, n // 3
    bx, by = gx, gy
    while k:
        if k & 1:
            x, y = (x * bx - y * by) % q, (x * by + y * bx - y * by) % q
        bx, by = (bx * bx - by * by) % q, (2 * bx * by - by * by) % q
        k >>= 1
    c = 1 if (x, y) == (0, 1) else 2
    bins = K.inert_bins(q, gx, gy)
    return complex(bins[0] + _ROOTS[c] * bins[1] + _ROOTS[(2 * c) % 3] * bins[2])


def gauss_prime(pi: EisensteinInt) -> complex:
    """g(1, pi) for a primary prime, via the batch engine."""
    if pi.b == 0:
        return gauss_inert(abs(pi.a))
    return _conj_char(pi, pi.b) * tau_split_fast(pi)


def _conj_char(pi: EisensteinInt, x: int) -> complex:
    p = norm(pi)
    r = w_mod_prime(pi, p)
    t = pow(x % p, (p - 1) // 3, p)
    k = 0 if t == 1 else (1 if t == r else 2)
    return _ROOTS[(-k) % 3]


def gauss_table(rows: np.ndarray) -> np.ndarray:
    """g(1, pi) for rows (a, b, norm, kind); one period sum per rational prime."""
    out = np.empty(len(rows), dtype=np.complex128)
    taus: dict[int, complex] = {}
    for i, (a, b, n, kind) in enumerate(rows.tolist()):
        pi = EisensteinInt(a, b)
        if kind == 2:
            out[i] = gauss_inert(-a)
            continue
        if n not in taus:
            # tau for the b > 0 member; the conjugate has the conjugate tau
            base = pi if b > 0 else pi.conj()
            taus[n] = tau_split_fast(base)
        tau = taus[n] if b > 0 else taus[n].conjugate()
        out[i] = _conj_char(pi, b) * tau
    return out


def gauss_table_cached(limit: int, family_only: bool) -> tuple[np.ndarray, np.ndarray]:
    """(rows, g) for primary primes up to limit, cached as CSV a,b,norm,re,im."""
    key = cache.cache_key("gauss-batch", limit=int(limit), family=family_only)
    text = cache.read(key)
    if text is None:
        rows = primary_prime_table(limit)
        if family_only:
            rows = rows[((rows[:, 0] - 1) % 9 == 0) & (rows[:, 1] % 9 == 0)]
        g = gauss_table(rows)
        text = gauss_csv(rows, g)
        cache.write(key, text)
    return parse_gauss_csv(text)


def gauss_csv(rows: np.ndarray, g: np.ndarray) -> str:
    lines = ["a,b,norm,re,im"]
    for (a, b, n, _), v in zip(rows.tolist(), g.tolist()):
        lines.append(f"{a},{b},{n},{v.real!r},{v.imag!r}")
    return "\n".join(lines) + "\n"


def parse_gauss_csv(text: str) -> tuple[np.ndarray, np.ndarray]:
    rows, vals = [], []
    for line in text.strip().splitlines()[1:]:
        a, b, n, re_, im_ = line.split(",")
        a, b, n = int(a), int(b), int(n)
        rows.append((a, b, n, 2 if b == 0 else 1))
        vals.append(complex(float(re_), float(im_)))
    return np.array(rows, dtype=np.int64).reshape(-1, 4), np.array(vals, dtype=np.complex128)


# ----------------------------------------------------------------- h(r, s; psi)


def h_terms(r: EisensteinInt, s: complex, psi: tuple | None, x: float) -> tuple[np.ndarray, np.ndarray]:
    """(norms, terms) of the series over primary primes coprime to r with N <= x."""
    r = primary_associate(r)
    rows, g = gauss_table_cached(int(x), family_only=False)
    G = ray_class_group9()
    norms = rows[:, 2]
    keep = norms <= x
    terms = []
    kept_norms = []
    for (a, b, n, _), gv in zip(rows[keep].tolist(), g[keep].tolist()):
        pi = EisensteinInt(a, b)
        if r != EisensteinInt(1) and divides(pi, r):
            continue
        val = gv
        if r != EisensteinInt(1):
            e = symbol_exponent(r, pi)
            val *= _ROOTS[(-e) % 3]  # g(r, pi) = conj(chi)(r) g(1, pi)
        if psi is not None and any(psi):
            val *= G.char_value(psi, pi)
        lam = math.log(n)
        terms.append(lam * val * n ** (-s))
        kept_norms.append(n)
    return np.array(kept_norms, dtype=np.int64), np.array(terms, dtype=np.complex128)


def h_partial(r: EisensteinInt, s: complex, psi: tuple | None, x: float) -> complex:
    if x < 2:
        return 0j
    _, terms = h_terms(r, s, psi, x)
    if terms.size == 0:
        return 0j
    return _fsum_complex(terms)


def cancellation_exponent(r: EisensteinInt, s: complex, x_lo: float, x_hi: float, points: int = 40):
    """Least-squares slope of log|S(x)| against log x, with the sampled (x, |S|)."""
    norms, terms = h_terms(r, s, None, x_hi)
    cums = np.cumsum(terms)
    xs = np.geomspace(x_lo, x_hi, points)
    idx = np.searchsorted(norms, xs, side="right") - 1
    mags = np.abs(cums[idx])
    slope, intercept = np.polyfit(np.log(xs), np.log(mags), 1)
    return float(slope), float(math.exp(intercept)), xs, mags
