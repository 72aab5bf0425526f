"""Hecke L-functions of the cubic characters chi_pi and their Dirichlet restrictions.

Normalisations, with d the degree of the gamma factor:

    K side:  Lambda(s) = Qc^s Gamma(s) L(s),    Qc = sqrt(3 N(pi)) / (2 pi),  d = 1
    Q side:  Lambda(s) = Qc^s Gamma(s/2) L(s),  Qc = sqrt(p / pi),            d = 2

and Lambda(s, chi) = W Lambda(1 - s, conj chi) with W = g / sqrt(N).  Values
come from the smoothed approximate functional equation

    Lambda(s) = sum c_n (Qc/n)^s Gamma(s/d, (n/Qc)^d A e^{i delta})
              + W sum conj(c_n) (Qc/n)^(1-s) Gamma((1-s)/d, (n/Qc)^d e^{-i delta} / A)

which is exact for every A > 0 and |delta| < pi/2; delta is turned towards the
sign of Im s so that the terms are no larger than e^B |Qc^s Gamma(s/d)|.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize, special

from . import _kernels as K
from . import cache
from .eisenstein import EisensteinInt, ResourceLimit, is_primary, norm, parse_eis, format_eis
from .gauss import gauss_prime, tau_split_direct, w_mod_prime
from .primes import _split_all, is_prime_element, rational_primes
from .symbols import CubicValue, W as OMEGA_C, symbol_exponent

_ROOTS = np.array([1.0 + 0j, OMEGA_C, OMEGA_C.conjugate()])

ROTATION_B = 10.0  # e^B bounds the cancellation inside the smoothed sums
DIRECT_CAP = 2_000_000  # largest norm the direct Dirichlet series will sum to
DIRECT_TOL = 1e-9


class NumericGuardError(ArithmeticError):
    """A numerical safeguard tripped (exit status 2 in the CLI)."""


class TailBoundError(NumericGuardError):
    pass


class AccuracyBudgetError(NumericGuardError):
    pass


class IllConditionedError(NumericGuardError):
    pass


class ZeroFinderError(NumericGuardError):
    pass


# ---------------------------------------------------------------- characters


@dataclass(frozen=True)
class CubicCharacter:
    """x -> (x/pi)_3 (or its conjugate), on Z[w] (side 'K') or on Z (side 'Q')."""

    pi: EisensteinInt
    side: str = "K"
    conjugate: bool = False

    @property
    def modulus_norm(self) -> int:
        return norm(self.pi)

    def exponent(self, x) -> int:
        if self.side == "Q":
            x = EisensteinInt(int(x), 0)
        e = symbol_exponent(x, self.pi)
        if e < 0:
            return -1
        return (-e) % 3 if self.conjugate else e

    def __call__(self, x) -> CubicValue:
        return CubicValue.from_exponent(self.exponent(x))

    def bar(self) -> "CubicCharacter":
        return CubicCharacter(self.pi, self.side, not self.conjugate)


def _check_modulus(pi: EisensteinInt, side: str) -> None:
    if not is_primary(pi) or not is_prime_element(pi):
        raise ValueError(f"{format_eis(pi)} is not a primary prime")
    n = norm(pi)
    if side == "K" and n % 9 != 1:
        # (w/pi)_3 = w^((N-1)/3) must be trivial for a character on ideals
        raise ValueError(f"chi_{format_eis(pi)} is not trivial on units (N = {n} != 1 mod 9)")
    if side == "Q" and pi.b == 0:
        raise ValueError("Q-side characters need a split prime")


# ---------------------------------------------------------------- ideal table


@dataclass
class IdealTable:
    """Ideals of Z[w] sorted by norm with one factorisation step each."""

    max_norm: int
    A: np.ndarray
    B: np.ndarray
    N: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    base: np.ndarray  # prime-power base index or -1

    def upto(self, x: float) -> int:
        return int(np.searchsorted(self.N, int(x), side="right"))


_TABLE: IdealTable | None = None


def ideal_table(max_norm: float) -> IdealTable:
    global _TABLE
    max_norm = int(max_norm)
    if max_norm > 4 * DIRECT_CAP:
        raise ResourceLimit(f"ideal table beyond norm {4 * DIRECT_CAP} requested")
    if _TABLE is None or _TABLE.max_norm < max_norm:
        size = max(max_norm, 2 * (_TABLE.max_norm if _TABLE else 0), 4096)
        ps = rational_primes(size)
        sp = np.array(_split_all(ps[ps % 3 == 1]), dtype=np.int64).reshape(-1, 3)
        A, B, N, P, Q = K.build_ideal_table(size, sp[:, 2].copy(), sp[:, 0].copy(), sp[:, 1].copy())
        _TABLE = IdealTable(size, A, B, N, P, Q, K.prime_power_base(P, Q))
    return _TABLE


# ---------------------------------------------------------------- handles


@dataclass
class LSeriesHandle:
    character: CubicCharacter
    conductor_norm: int
    root_number: complex
    side: str
    gauss: complex  # g(1, pi) on the K side, tau(chi) on the Q side (for the unconjugated character)
    degree: int
    qscale: float
    _cutoff: int = field(default=0, repr=False)
    _norms: np.ndarray = field(default=None, repr=False)
    _coeffs: np.ndarray = field(default=None, repr=False)

    @property
    def conjugate(self) -> bool:
        return self.character.conjugate

    def bar(self) -> "LSeriesHandle":
        return LSeriesHandle(
            self.character.bar(), self.conductor_norm, self.root_number.conjugate(), self.side,
            self.gauss, self.degree, self.qscale,
        )

    def _ideal_exponents(self, tbl: IdealTable, k: int) -> np.ndarray:
        pi = self.character.pi
        if pi.b == 0:
            pe = K.prime_ideal_exponents_inert(tbl.A[:k], tbl.B[:k], tbl.Q[:k], abs(pi.a))
        else:
            p = self.conductor_norm
            pe = K.prime_ideal_exponents(tbl.A[:k], tbl.B[:k], tbl.N[:k], tbl.P[:k], tbl.Q[:k], pi.a, pi.b, p, w_mod_prime(pi, p))
        if (pe < -1).any():
            raise AssertionError("cubic symbol outside {0, 1, w, w^2}")
        e = K.propagate_exponents(tbl.P[:k], tbl.Q[:k], pe)
        if self.conjugate:
            e = np.where(e >= 0, (-e) % 3, -1)
        return e

    def ideal_coefficients(self, cutoff: float) -> tuple[np.ndarray, np.ndarray]:
        """(norms, chi(a)) for every ideal a with N(a) <= cutoff, in table order."""
        if self.side != "K":
            raise ValueError("ideal coefficients exist on the K side only")
        tbl = ideal_table(cutoff)
        k = tbl.upto(cutoff)
        e = self._ideal_exponents(tbl, k)
        vals = np.where(e >= 0, _ROOTS[np.maximum(e, 0)], 0)
        return tbl.N[:k], vals

    def coefficients(self, cutoff: float) -> tuple[np.ndarray, np.ndarray]:
        """Distinct norms n <= cutoff carrying coefficients, with c_n = sum over N(a) = n."""
        cutoff = max(int(cutoff), 1)
        if cutoff > self._cutoff:
            self._build(max(cutoff, int(1.25 * self._cutoff)))
        k = int(np.searchsorted(self._norms, cutoff, side="right"))
        return self._norms[:k], self._coeffs[:k]

    def _build(self, cutoff: int) -> None:
        if self.side == "K":
            ns, vals = self.ideal_coefficients(cutoff)
            re = np.bincount(ns, weights=vals.real, minlength=cutoff + 1)
            im = np.bincount(ns, weights=vals.imag, minlength=cutoff + 1)
            live = np.bincount(ns, weights=(vals != 0).astype(float), minlength=cutoff + 1) > 0
            norms = np.nonzero(live)[0]
            coeffs = re[norms] + 1j * im[norms]
        else:
            pi = self.character.pi
            p = self.conductor_norm
            e = K.rational_exponents(cutoff, p, w_mod_prime(pi, p))
            if self.conjugate:
                e = np.where(e >= 0, (-e) % 3, -1)
            norms = np.nonzero(e >= 0)[0]
            norms = norms[norms >= 1]
            coeffs = _ROOTS[e[norms]]
        self._norms, self._coeffs, self._cutoff = norms.astype(np.int64), coeffs, cutoff


def make_handle(pi, side: str = "K", conjugate: bool = False, gauss: complex | None = None) -> LSeriesHandle:
    """Handle for L(s, chi_pi) ('K') or the induced Dirichlet L_Q(s, chi) ('Q')."""
    if isinstance(pi, str):
        pi = parse_eis(pi)
    pi = getattr(pi, "pi", pi)
    _check_modulus(pi, side)
    n = norm(pi)
    if side == "K":
        g = gauss_prime(pi) if gauss is None else complex(gauss)
        d, qc = 1, math.sqrt(3.0 * n) / (2 * math.pi)
    elif side == "Q":
        g = induced_tau(pi) if gauss is None else complex(gauss)
        d, qc = 2, math.sqrt(n / math.pi)
    else:
        raise ValueError(f"unknown side {side!r}")
    W = g / math.sqrt(n)
    if abs(abs(W) - 1) > 1e-8:
        raise NumericGuardError(f"root number off the unit circle: |W| = {abs(W)!r}")
    h = LSeriesHandle(CubicCharacter(pi, side), n, W, side, g, d, qc)
    return h.bar() if conjugate else h


def induced_tau(pi) -> complex:
    """sum_{x mod p} chi(x) e(x/p) for the Dirichlet character n -> (n/pi)_3."""
    pi = getattr(pi, "pi", pi)
    if pi.b == 0 or not is_prime_element(pi):
        raise ValueError(f"{format_eis(pi)} is not a split prime")
    return tau_split_direct(pi)


# ---------------------------------------------------------------- smoothed AFE


def _rotation(t: float, d: int, B: float = ROTATION_B) -> float:
    if t == 0:
        return 0.0
    return math.copysign(max(0.0, math.pi / 2 - B * d / abs(t)), t)


def _ray_cutoff(re_a: float, cosd: float, B: float = ROTATION_B) -> float:
    """Radius beyond which t^(a-1) e^(-t cos delta) is below e^-(42+B) of the scale."""
    target = 42.0 + B
    r = target / cosd
    for _ in range(30):
        r = (target + max(re_a - 1.0, 0.0) * math.log(max(r, 1.0))) / cosd
    return r


def _afe(h: LSeriesHandle, s: complex, A: float = 1.0, want_d: bool = False):
    """(Lambda(s), Lambda'(s), scale) with scale = sum of |terms|."""
    s = complex(s)
    d = h.degree
    if s.imag == 0 and s.real <= 0 and float(s.real / d).is_integer():
        raise ValueError("s at a pole of the gamma factor")
    delta = _rotation(s.imag, d)
    cosd = math.cos(delta)
    a1, a2 = s / d, (1 - s) / d
    rmax = _ray_cutoff(max(a1.real, a2.real), cosd)
    n1 = h.qscale * (rmax / A) ** (1.0 / d)
    n2 = h.qscale * (rmax * A) ** (1.0 / d)
    norms, c = h.coefficients(max(n1, n2))
    if norms.size == 0:
        raise AccuracyBudgetError("empty coefficient range")
    logq = np.log(h.qscale) - np.log(norms.astype(np.float64))
    u = (norms / h.qscale) ** d

    m1 = norms <= n1
    G1, dG1 = K.upper_gamma_ray(a1, u[m1] * A, delta, rmax, want_d)
    f1 = c[m1] * np.exp(s * logq[m1])
    t1 = f1 * G1
    m2 = norms <= n2
    G2, dG2 = K.upper_gamma_ray(a2, u[m2] / A, -delta, rmax, want_d)
    f2 = h.root_number * np.conj(c[m2]) * np.exp((1 - s) * logq[m2])
    t2 = f2 * G2
    val = t1.sum() + t2.sum()
    scale = float(np.abs(t1).sum() + np.abs(t2).sum())
    der = 0j
    if want_d:
        der = (f1 * (logq[m1] * G1 + dG1 / d)).sum() - (f2 * (logq[m2] * G2 + dG2 / d)).sum()
    return complex(val), complex(der), scale


def _log_gamma_factor(h: LSeriesHandle, s: complex) -> complex:
    """log(Qc^s Gamma(s/d))."""
    return s * math.log(h.qscale) + complex(special.loggamma(s / h.degree))


def completed_L(h: LSeriesHandle, s: complex, A: float = 1.0) -> complex:
    val, _, scale = _afe(h, s, A)
    # roundoff relative to the size of Lambda itself
    if scale > 1e7 * max(abs(val), 1e-300) and scale * 1e-16 > 1e-8 * abs(cmath.exp(_log_gamma_factor(h, s))):
        raise AccuracyBudgetError(f"cancellation in the smoothed sums at s = {s}")
    return val


def _L_from_afe(h: LSeriesHandle, s: complex, A: float = 1.0) -> complex:
    val, _, _ = _afe(h, s, A)
    return val * cmath.exp(-_log_gamma_factor(h, s))


def ideal_count_bound(x: float) -> float:
    """Upper bound for #{ideals with N <= x}: area pi x / (3 sqrt 3) plus boundary."""
    return math.pi / (3 * math.sqrt(3)) * x + 2.31 * math.sqrt(x) + 1.0


def direct_tail_bound(sigma: float, M: float, side: str = "K") -> float:
    """Bound for sum_{N(a) > M} N(a)^-sigma from the counting bound, sigma > 1."""
    if side == "Q":
        return M ** (1 - sigma) / (sigma - 1)
    c0, c1, c2 = math.pi / (3 * math.sqrt(3)), 2.31, 1.0
    return sigma * (c0 * M ** (1 - sigma) / (sigma - 1) + c1 * M ** (0.5 - sigma) / (sigma - 0.5) + c2 * M**-sigma / sigma)


def direct_cutoff(sigma: float, tol: float = DIRECT_TOL, side: str = "K", cap: int = DIRECT_CAP) -> int:
    if sigma <= 1:
        raise ValueError("direct mode needs Re(s) > 1")
    lo, hi = 1, cap
    if direct_tail_bound(sigma, hi, side) > tol:
        raise TailBoundError(
            f"tail bound {direct_tail_bound(sigma, hi, side):.3g} > {tol:g} at the working cutoff {cap}"
        )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if direct_tail_bound(sigma, mid, side) <= tol:
            hi = mid
        else:
            lo = mid
    return hi


def _fsum_c(z: np.ndarray) -> complex:
    return complex(math.fsum(z.real.tolist()), math.fsum(z.imag.tolist()))


def dirichlet_series(h: LSeriesHandle, s: complex, cutoff: int) -> complex:
    norms, c = h.coefficients(cutoff)
    return _fsum_c(c * np.exp(-complex(s) * np.log(norms.astype(np.float64))))


def hecke_L(h: LSeriesHandle, s: complex, mode: str = "auto", cutoff: int | None = None, A: float = 1.0) -> complex:
    """L(s, chi).  mode 'direct' (Re s > 1, tail bound 1e-9 unless a cutoff is forced),
    'reflected' (completed function via the functional equation), or 'auto'."""
    s = complex(s)
    if mode == "auto":
        if s.real > 1:
            try:
                return hecke_L(h, s, "direct", cutoff)
            except TailBoundError:
                pass
        return _L_from_afe(h, s, A)
    if mode == "direct":
        if s.real <= 1:
            raise ValueError("direct mode needs Re(s) > 1")
        M = cutoff if cutoff is not None else direct_cutoff(s.real, side=h.side)
        return dirichlet_series(h, s, M)
    if mode == "reflected":
        return _L_from_afe(h, s, A)
    raise ValueError(f"unknown mode {mode!r}")


def euler_L(h: LSeriesHandle, s: complex, cutoff: int) -> complex:
    """Truncated Euler product over prime ideals (K) or primes (Q) of norm <= cutoff."""
    s = complex(s)
    if s.real <= 1:
        raise ValueError("Euler product needs Re(s) > 1")
    if h.side == "K":
        tbl = ideal_table(cutoff)
        k = tbl.upto(cutoff)
        e = h._ideal_exponents(tbl, k)
        prime = (tbl.Q[:k] == 0) & (np.arange(k) > 0) & (e >= 0)
        n = tbl.N[:k][prime].astype(np.float64)
        chi = _ROOTS[e[prime]]
    else:
        ps = rational_primes(cutoff)
        pi = h.character.pi
        r = w_mod_prime(pi, h.conductor_norm)
        e = K.rational_exponents(int(cutoff), h.conductor_norm, r)[ps]
        if h.conjugate:
            e = np.where(e >= 0, (-e) % 3, -1)
        keep = e >= 0
        n = ps[keep].astype(np.float64)
        chi = _ROOTS[e[keep]]
    return complex(np.exp(-np.log1p(-chi * np.exp(-s * np.log(n))).sum()))


def dirichlet_L(pi, s: complex, mode: str = "auto", conjugate: bool = False) -> complex:
    return hecke_L(make_handle(pi, "Q", conjugate), s, mode)


def log_deriv(h: LSeriesHandle, s: complex, A: float = 1.0) -> complex:
    """L'/L(s) by the differentiated smoothed functional equation."""
    s = complex(s)
    val, der, _ = _afe(h, s, A, want_d=True)
    gamma_part = math.log(h.qscale) + complex(special.psi(s / h.degree)) / h.degree
    L = val * cmath.exp(-_log_gamma_factor(h, s))
    if abs(L) < 1e-10:
        raise IllConditionedError(f"|L| = {abs(L):.2e} at s = {s}: too close to a zero")
    return der / val - gamma_part


def log_deriv_direct(h: LSeriesHandle, s: complex, cutoff: int) -> complex:
    """-sum Lambda(a) chi(a) N(a)^-s over ideals with N(a) <= cutoff (K side)."""
    s = complex(s)
    if h.side == "K":
        tbl = ideal_table(cutoff)
        k = tbl.upto(cutoff)
        e = h._ideal_exponents(tbl, k)
        base = tbl.base[:k]
        keep = (base >= 0) & (e >= 0)
        lam = np.log(tbl.N[:k][base[keep]].astype(np.float64))
        n = tbl.N[:k][keep].astype(np.float64)
        chi = _ROOTS[e[keep]]
    else:
        ns = np.arange(2, int(cutoff) + 1)
        lam_full = np.zeros(int(cutoff) + 1)
        for p in rational_primes(cutoff).tolist():
            pk = p
            while pk <= cutoff:
                lam_full[pk] = math.log(p)
                pk *= p
        pi = h.character.pi
        e = K.rational_exponents(int(cutoff), h.conductor_norm, w_mod_prime(pi, h.conductor_norm))
        if h.conjugate:
            e = np.where(e >= 0, (-e) % 3, -1)
        keep = (lam_full[ns] > 0) & (e[ns] >= 0)
        lam, n, chi = lam_full[ns][keep], ns[keep].astype(np.float64), _ROOTS[e[ns][keep]]
    return -_fsum_c(lam * chi * np.exp(-s * np.log(n)))


# ---------------------------------------------------------------- zeros


@dataclass
class ZeroList:
    ordinates: list
    height: float
    verified_count: int
    status: str = "ok"
    refined_error: list = field(default_factory=list)

    def __len__(self):
        return len(self.ordinates)


def hardy_Z(h: LSeriesHandle, t: float) -> float:
    """W^(-1/2) Lambda(1/2 + it) / |Qc^s Gamma(s/d)|: real, with |Z| = |L(1/2 + it)|."""
    s = complex(0.5, t)
    val, _, _ = _afe(h, s)
    z = val * cmath.exp(-_log_gamma_factor(h, s).real) / cmath.sqrt(h.root_number)
    return z.real


def _arg_change_L(h: LSeriesHandle, path: list[complex], step: float = 0.2) -> float:
    """Continuous change of arg L along a polyline, subdividing until each step turns < 0.4 rad."""
    total = 0.0
    for z0, z1 in zip(path[:-1], path[1:]):
        n = max(2, int(math.ceil(abs(z1 - z0) / step)))
        pts = [z0 + (z1 - z0) * k / n for k in range(n + 1)]
        vals = [_L_from_afe(h, z) for z in pts]
        stack = list(zip(zip(pts[:-1], pts[1:]), zip(vals[:-1], vals[1:])))[::-1]
        while stack:
            (a, b), (fa, fb) = stack.pop()
            turn = cmath.phase(fb / fa)
            if abs(turn) < 0.4 or abs(b - a) < 1e-7:
                total += turn
                continue
            m = 0.5 * (a + b)
            fm = _L_from_afe(h, m)
            stack.append(((m, b), (fm, fb)))
            stack.append(((a, m), (fa, fm)))
    return total


def zero_count(h: LSeriesHandle, T: float, sigma0: float = 1.5) -> float:
    """Zeros with |gamma| <= T by the argument principle (as a real number, ideally integral)."""
    lo, hi = complex(0.5, -T), complex(0.5, T)
    gamma_turn = (_log_gamma_factor(h, hi) - _log_gamma_factor(h, lo)).imag
    path = [lo, complex(sigma0, -T), complex(sigma0, T), hi]
    return (gamma_turn + _arg_change_L(h, path)) / math.pi


def _mean_spacing(h: LSeriesHandle, T: float) -> float:
    dens = math.log(max(h.qscale**2 * max(T, 1.0) ** 2 / h.degree**2, math.e)) / math.pi
    return 1.0 / max(dens, 1e-3)


def _safe_height(h: LSeriesHandle, T: float) -> float:
    """Nudge T down slightly so that no zero sits on the contour corners."""
    eps = 1e-3
    for k in range(20):
        t = T - k * eps
        zs = [abs(hardy_Z(h, t + x)) for x in (-eps, 0.0, eps)]
        if zs[1] > 1e-4:
            return t
    return T


def find_zeros(h: LSeriesHandle, T: float, strict: bool = True) -> ZeroList:
    """All zeros with |gamma| <= T, refined to 1e-10 and checked against the contour count."""
    if T > 50:
        raise ValueError("heights above 50 are out of range")
    key = cache.cache_key(
        "zeros", pi=format_eis(h.character.pi), side=h.side, conj=h.conjugate, T=repr(float(T))
    )
    text = cache.read(key)
    if text is not None:
        zl = _parse_zero_csv(text, T)
        if strict and zl.status != "ok":
            raise ZeroFinderError(f"cached failure for {format_eis(h.character.pi)}")
        return zl
    Tc = _safe_height(h, T)
    expected = zero_count(h, Tc)
    n_exp = round(expected)
    status = "ok"
    if abs(expected - n_exp) > 0.1:
        status = f"non-integral contour count {expected:.4f}"
    Z = lambda t: hardy_Z(h, t)
    step = min(0.1, _mean_spacing(h, Tc) / 6)
    grid = np.linspace(-Tc, Tc, int(math.ceil(2 * Tc / step)) + 1)
    vals = np.array([Z(t) for t in grid])
    roots = _sign_change_roots(Z, grid, vals)
    for _ in range(5):
        if len(roots) >= n_exp:
            break
        grid, vals, extra = _refine_minima(Z, grid, vals)
        if not extra:
            break
        roots = _sign_change_roots(Z, grid, vals)
    roots.sort()
    if status == "ok" and len(roots) != n_exp:
        status = f"count mismatch: {len(roots)} refined vs {n_exp} by contour"
    errs = [abs(Z(g)) for g in roots]
    zl = ZeroList(roots, float(T), n_exp, status, errs)
    cache.write(key, zero_csv(zl))
    if strict and status != "ok":
        raise ZeroFinderError(f"{format_eis(h.character.pi)}: {status}")
    return zl


def _sign_change_roots(Z, grid, vals) -> list[float]:
    out = []
    for i in range(len(grid) - 1):
        if vals[i] == 0:
            out.append(float(grid[i]))
        elif vals[i] * vals[i + 1] < 0:
            out.append(float(optimize.brentq(Z, grid[i], grid[i + 1], xtol=1e-11, rtol=1e-14)))
    return out


def _refine_minima(Z, grid, vals):
    """Resample around local minima of |Z| that show no sign change (possible close pairs)."""
    a = np.abs(vals)
    new_t, new_v = [], []
    for i in range(1, len(grid) - 1):
        if a[i] < a[i - 1] and a[i] < a[i + 1] and vals[i - 1] * vals[i + 1] > 0 and vals[i] * vals[i - 1] > 0:
            ts = np.linspace(grid[i - 1], grid[i + 1], 17)[1:-1]
            ts = ts[~np.isin(ts, grid)]
            new_t.extend(ts.tolist())
            new_v.extend(Z(t) for t in ts)
    if not new_t:
        return grid, vals, False
    g = np.concatenate([grid, new_t])
    v = np.concatenate([vals, new_v])
    order = np.argsort(g)
    return g[order], v[order], True


def zero_csv(zl: ZeroList) -> str:
    lines = [f"# height={zl.height!r} verified_count={zl.verified_count} status={zl.status}", "ordinate,refined_error"]
    lines += [f"{g!r},{e!r}" for g, e in zip(zl.ordinates, zl.refined_error)]
    return "\n".join(lines) + "\n"


def _parse_zero_csv(text: str, T: float) -> ZeroList:
    lines = text.strip().splitlines()
    meta = dict(kv.split("=", 1) for kv in lines[0][2:].split(" ", 2))
    ords, errs = [], []
    for line in lines[2:]:
        g, e = line.split(",")
        ords.append(float(g))
        errs.append(float(e))
    return ZeroList(ords, float(T), int(meta["verified_count"]), meta["status"], errs)
