"""Special functions, weights, density test functions and error exponents."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import mpmath
import numpy as np
from scipy import integrate, special

from .primes import rational_primes

LOG3 = math.log(3.0)
SQRT_D = math.sqrt(3.0)  # |D_K|^(1/2)


# ---------------------------------------------------------------- Gamma, digamma


def _check_pole(s: complex) -> None:
    s = complex(s)
    if s.imag == 0 and s.real <= 0 and float(s.real).is_integer():
        raise ValueError(f"Gamma has a pole at {s.real:g}")


def gamma_c(s):
    _check_pole(s)
    return complex(special.gamma(complex(s)))


def loggamma_c(s):
    _check_pole(s)
    return complex(special.loggamma(complex(s)))


def digamma_c(s):
    _check_pole(s)
    return complex(special.psi(complex(s)))


# ---------------------------------------------------------------- zeta functions


def zeta(s) -> complex:
    if s == 1:
        raise ValueError("zeta has a pole at s = 1")
    return complex(mpmath.zeta(s))


def dirichlet_L3(s) -> complex:
    """L(s, chi_-3) = 3^-s (zeta(s, 1/3) - zeta(s, 2/3))."""
    return complex(mpmath.power(3, -s) * (mpmath.zeta(s, mpmath.mpf(1) / 3) - mpmath.zeta(s, mpmath.mpf(2) / 3)))


def _zeta_K_epstein(s, terms: int = 14) -> complex:
    """Chowla-Selberg for the form x^2 - xy + y^2 (a = c = 1, b = -1, disc 3).

    zeta_K(s) = Z(s)/6, Z the Epstein zeta of the form.
    """
    s = mpmath.mpc(s)
    a, b, Delta = 1, -1, 3
    t1 = 2 * mpmath.zeta(2 * s) * a ** (-s)
    t2 = (
        2 ** (2 * s) * a ** (s - 1) * mpmath.sqrt(mpmath.pi) * mpmath.gamma(s - 0.5) * mpmath.zeta(2 * s - 1)
        / (mpmath.gamma(s) * mpmath.mpf(Delta) ** (s - 0.5))
    )
    pref = 2 ** (s + 2.5) * mpmath.pi**s / (mpmath.sqrt(a) * mpmath.gamma(s) * mpmath.mpf(Delta) ** (s / 2 - 0.25))
    acc = mpmath.mpc(0)
    for n in range(1, terms + 1):
        sig = sum(mpmath.mpf(d) ** (1 - 2 * s) for d in range(1, n + 1) if n % d == 0)
        acc += (
            mpmath.mpf(n) ** (s - 0.5) * sig * math.cos(n * math.pi * b / a)
            * mpmath.besselk(s - 0.5, mpmath.pi * n * mpmath.sqrt(Delta) / a)
        )
    return complex((t1 + t2 + pref * acc) / 6)


@lru_cache(maxsize=8)
def _euler_primes(cutoff: int) -> np.ndarray:
    return rational_primes(cutoff).astype(np.float64)


def _zeta_K_euler(s, cutoff: int) -> complex:
    """Truncated Euler product over prime ideals of norm <= cutoff."""
    ps = _euler_primes(int(cutoff))
    s = complex(s)
    p1 = ps[ps % 3 == 1]
    p2 = ps[(ps % 3 == 2) & (ps * ps <= cutoff)]
    logs = -2.0 * np.log1p(-(p1 ** (-s))).sum() - np.log1p(-(p2 ** (-2 * s))).sum()
    logs = logs - np.log1p(-(3.0 ** (-s)))
    return complex(np.exp(logs))


def zeta_K(s, method: str = "factor", cutoff: int = 10**7) -> complex:
    """Dedekind zeta of Q(w): 'factor' zeta(s)L(s, chi_-3), 'euler', or 'epstein'."""
    if s == 1:
        raise ValueError("zeta_K has a pole at s = 1")
    if method == "factor":
        return zeta(s) * dirichlet_L3(s)
    if method == "euler":
        if complex(s).real <= 1:
            raise ValueError("Euler product needs Re(s) > 1")
        return _zeta_K_euler(s, cutoff)
    if method == "epstein":
        return _zeta_K_epstein(s)
    raise ValueError(f"unknown method {method!r}")


def zeta_K_j(s, method: str = "factor") -> complex:
    """zeta_K with the Euler factor at (1 - w) removed."""
    return zeta_K(s, method) * (1 - 3.0 ** (-complex(s)))


def zeta_j(s) -> complex:
    """Rational zeta with the factor at 3 removed."""
    return zeta(s) * (1 - 3.0 ** (-complex(s)))


def central_diff(f: Callable, s, h: float = 1e-6) -> tuple[complex, float]:
    """f'(s) by central differences at steps h and 2h; returns (value, |difference|)."""
    d1 = (f(s + h) - f(s - h)) / (2 * h)
    d2 = (f(s + 2 * h) - f(s - 2 * h)) / (4 * h)
    return complex(d1), abs(d1 - d2)


def log_derivative(f: Callable, s, h: float = 1e-6) -> complex:
    d, _ = central_diff(f, s, h)
    return d / f(s)


def zeta_K_j_logderiv_exact(s) -> complex:
    """(zeta_K^(j))'/zeta_K^(j) from mpmath's analytic derivatives (independent oracle)."""
    s = mpmath.mpc(s)
    third = mpmath.mpf(1) / 3
    z, dz = mpmath.zeta(s), mpmath.zeta(s, 1, 1)
    h1, h2 = mpmath.zeta(s, third), mpmath.zeta(s, 2 * third)
    dh1, dh2 = mpmath.zeta(s, third, 1), mpmath.zeta(s, 2 * third, 1)
    ld_L = -mpmath.log(3) + (dh1 - dh2) / (h1 - h2)
    ld_3 = mpmath.log(3) * mpmath.power(3, -s) / (1 - mpmath.power(3, -s))
    return complex(dz / z + ld_L + ld_3)


# ---------------------------------------------------------------- weights


def _bump(t):
    t = np.asarray(t, dtype=np.float64)
    out = np.zeros_like(t)
    m = (t > 1) & (t < 2)
    tm = t[m]
    out[m] = np.exp(-1.0 / (tm - 1.0) - 1.0 / (2.0 - tm))
    return out


_GL_X, _GL_W = np.polynomial.legendre.leggauss(240)


@dataclass(frozen=True)
class WeightFunction:
    name: str
    evaluate: Callable
    support: tuple = (1.0, 2.0)

    def mellin(self, s) -> complex:
        """hat w(s) = int w(t) t^(s-1) dt by adaptive quadrature."""
        s = complex(s)
        lo, hi = self.support
        f_re = lambda t: float(self.evaluate(t)) * (t ** (s - 1)).real
        f_im = lambda t: float(self.evaluate(t)) * (t ** (s - 1)).imag
        re = integrate.quad(f_re, lo, hi, epsabs=1e-14, epsrel=1e-12, limit=200)[0]
        im = integrate.quad(f_im, lo, hi, epsabs=1e-14, epsrel=1e-12, limit=200)[0]
        return complex(re, im)

    def mellin_many(self, s: np.ndarray, nodes: int | None = None) -> np.ndarray:
        """Vectorised hat w on an array of s by Gauss-Legendre (node count grows with |Im s|)."""
        lo, hi = self.support
        s = np.asarray(s, dtype=np.complex128)
        if nodes is None:
            tmax = float(np.abs(s.imag).max()) if s.size else 0.0
            nodes = max(240, int(2 * tmax * math.log(hi / lo)) + 60)
        x, w = (_GL_X, _GL_W) if nodes == 240 else np.polynomial.legendre.leggauss(nodes)
        t = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
        wt = 0.5 * (hi - lo) * w * self.evaluate(t)
        lt = np.log(t)
        out = np.empty(s.shape, dtype=np.complex128)
        flat, res = s.ravel(), out.ravel()
        for i in range(0, flat.size, 2048):
            res[i : i + 2048] = (wt[None, :] * np.exp(np.outer(flat[i : i + 2048] - 1, lt))).sum(axis=1)
        return out

    def log_moment(self) -> float:
        """int w(u) log u du."""
        lo, hi = self.support
        return integrate.quad(lambda t: float(self.evaluate(t)) * math.log(t), lo, hi, epsabs=1e-14, limit=200)[0]

    def __call__(self, t):
        return self.evaluate(t)

    def scaled(self, c: float) -> "WeightFunction":
        return WeightFunction(f"{self.name}*{c:g}", lambda t: c * self.evaluate(t), self.support)


BUMP = WeightFunction("bump", _bump)


def get_weight(name: str) -> WeightFunction:
    if name == "bump":
        return BUMP
    raise ValueError(f"unknown weight {name!r}")


# ---------------------------------------------------------------- density test functions


@dataclass(frozen=True)
class DensityTestFunction:
    support_a: float
    evaluate: Callable
    fourier: Callable
    hat_at_1: float  # Mellin value int_0^inf h
    integral: float  # int_R h

    def __call__(self, x):
        return self.evaluate(x)


def fejer_pair(a: float) -> DensityTestFunction:
    """h(x) = (sin(pi a x)/(pi a x))^2, with Fourier transform the triangle on [-a, a]."""
    if a <= 0:
        raise ValueError("support a must be positive")

    def h(x):
        return np.sinc(a * np.asarray(x, dtype=np.complex128 if np.iscomplexobj(x) else np.float64)) ** 2

    def hhat(u):
        u = np.asarray(u, dtype=np.float64)
        return np.maximum(0.0, 1.0 - np.abs(u) / a) / a

    return DensityTestFunction(a, h, hhat, 0.5 / a, 1.0 / a)


def integrate_even(f: Callable, period: float, periods: int = 400, tail: Callable | None = None) -> float:
    """int_R f for an even integrand, Gauss-Legendre per period plus an optional tail."""
    x, w = np.polynomial.legendre.leggauss(24)
    edges = np.arange(periods + 1) * period
    lo, hi = edges[:-1], edges[1:]
    nodes = (0.5 * (hi - lo)[:, None] * x[None, :] + 0.5 * (hi + lo)[:, None]).ravel()
    weights = (0.5 * (hi - lo)[:, None] * w[None, :]).ravel()
    val = 2.0 * float(np.dot(weights, f(nodes)))
    if tail is not None:
        val += 2.0 * tail(edges[-1])
    return val


# ---------------------------------------------------------------- error exponents


@dataclass(frozen=True)
class ShiftExponent:
    alpha: complex
    beta: complex | None
    E: float
    delta: float


def error_exponent(alpha, beta=None) -> ShiftExponent:
    """E(alpha, beta) as a six-term max; beta=None or inf gives E(alpha)."""
    ra = complex(alpha).real
    delta = 2.0 / 11.0 if ra < 0 else 0.0
    terms = [0.5, 5.0 / 6.0 - ra, 12.0 / 13.0 - 11.0 / 13.0 * ra]
    if beta is not None and not (isinstance(beta, float) and math.isinf(beta)):
        rb = complex(beta).real
        terms += [1.0 - rb, 1.0 - 3.0 * ra - 2.0 * rb, 1.0 - 13.0 / 15.0 * ra - 2.0 / 15.0 * rb]
        return ShiftExponent(complex(alpha), complex(beta), max(terms), delta)
    return ShiftExponent(complex(alpha), None, max(terms), delta)
