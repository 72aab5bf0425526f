"""Family sums over primes pi = 1 (mod 9): ratios, moments, residue identity, one-level density.

Every K-side sum runs over prime elements pi = 1 mod 9 (split and inert) with
weight Lambda_K(pi) w(N(pi)/X); prime powers are not included.  The Q side runs
over split family members, each contributing its two cubic Dirichlet
characters chi_pi and conj chi_pi, so every rational prime p = N(pi) appears
through both conjugate generators.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import asdict, dataclass, field

import mpmath
import numpy as np
from scipy import special

from . import cache
from .analytic import (
    ShiftExponent,
    WeightFunction,
    central_diff,
    error_exponent,
    fejer_pair,
    get_weight,
    integrate_even,
    zeta_K_j,
    zeta_K_j_logderiv_exact,
    zeta_j,
)
from .eisenstein import EisensteinInt, format_eis
from .gauss import _conj_char, gauss_table_cached
from .lfunctions import (
    IllConditionedError,
    NumericGuardError,
    find_zeros,
    hecke_L,
    log_deriv,
    make_handle,
)
from .primes import family_array, rational_primes

H9 = 9  # order of the ray class group mod 9
SHIFT_INF = 5.0  # numerical stand-in for a shift sent to infinity
L_GUARD = 1e-12
LOG3 = math.log(3.0)
MAX_T = 50.0


class PreconditionError(ValueError):
    pass


@dataclass
class MomentReport:
    kind: str
    X_or_Q: float
    shifts: tuple
    lhs: complex
    main_term: complex
    ratio: complex | None
    predicted_exponent: ShiftExponent | None
    family_size: int
    weight_name: str
    flags: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def to_json(self) -> str:
        def enc(x):
            if isinstance(x, complex):
                return {"re": x.real, "im": x.imag}
            if isinstance(x, (np.floating, np.integer)):
                return x.item()
            raise TypeError(type(x))

        d = asdict(self)
        return json.dumps(d, default=enc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "MomentReport":
        def dec(x):
            if isinstance(x, dict):
                if set(x) == {"re", "im"}:
                    return complex(x["re"], x["im"])
                return {k: dec(v) for k, v in x.items()}
            if isinstance(x, list):
                return [dec(v) for v in x]
            return x

        d = dec(json.loads(text))
        pe = d.get("predicted_exponent")
        if pe is not None:
            d["predicted_exponent"] = ShiftExponent(**pe)
        d["shifts"] = tuple(d["shifts"])
        return cls(**d)


# ---------------------------------------------------------------- family data


@dataclass
class FamilyWindow:
    """Family members inside the weight's support, with Gauss sums and weights."""

    rows: np.ndarray  # (a, b, norm, kind)
    gauss: np.ndarray
    weights: np.ndarray  # w(N/X)
    lam: np.ndarray  # Lambda_K(pi) = log N(pi)

    def __len__(self):
        return len(self.rows)

    def elements(self):
        return [EisensteinInt(a, b) for a, b in self.rows[:, :2].tolist()]


def family_window(X: float, weight: WeightFunction, split_only: bool = False) -> FamilyWindow:
    lo, hi = weight.support
    limit = int(math.floor(hi * X))
    if limit < 2:
        z = np.zeros(0)
        return FamilyWindow(np.zeros((0, 4), dtype=np.int64), z.astype(complex), z, z)
    rows, g = gauss_table_cached(limit, family_only=True)
    n = rows[:, 2].astype(np.float64)
    wv = np.asarray(weight(n / X), dtype=np.float64)
    keep = wv > 0
    if split_only:
        keep &= rows[:, 3] == 1
    return FamilyWindow(rows[keep], g[keep], wv[keep], np.log(n[keep]))


def _fsum_c(vals) -> complex:
    vals = np.asarray(vals, dtype=np.complex128)
    return complex(math.fsum(vals.real.tolist()), math.fsum(vals.imag.tolist()))


def family_size(X: float) -> int:
    return int(len(family_array(X)))


def weighted_prime_sum(X: float, weight: WeightFunction, split_only: bool = False, q_side: bool = False) -> float:
    """F(X) = sum Lambda_K(pi) w(N(pi)/X) over the family (the Q side uses Lambda(p) twice per pi)."""
    fw = family_window(X, weight, split_only or q_side)
    mult = 2.0 if q_side else 1.0
    return mult * math.fsum((fw.lam * fw.weights).tolist())


def _handle(row, g, side: str):
    a, b = int(row[0]), int(row[1])
    pi = EisensteinInt(a, b)
    if side == "Q":
        # tau(chi) = chi(b) g(1, pi)
        return make_handle(pi, "Q", gauss=g / _conj_char(pi, b))
    return make_handle(pi, "K", gauss=g)


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def _shift(x) -> complex:
    return complex(x)


# ---------------------------------------------------------------- per-member statistics


def _member_terms(fw: FamilyWindow, side: str, stat) -> tuple[list, list]:
    """Apply stat(handle) -> complex to each member; returns (values, flags)."""
    vals, flags = [], []
    for row, g in zip(fw.rows, fw.gauss):
        h = _handle(row, g, side)
        try:
            vals.append(stat(h))
        except IllConditionedError as e:
            vals.append(None)
            flags.append(f"{format_eis(h.character.pi)}: {e}")
    return vals, flags


def _ratio_stat(alpha: complex, beta: complex):
    def f(h):
        den = hecke_L(h, 0.5 + beta, "reflected")
        if abs(den) < L_GUARD:
            raise IllConditionedError(f"|L(1/2+beta)| = {abs(den):.2e} below guard")
        num = hecke_L(h, 0.5 + alpha, "reflected")
        return num / den

    return f


def _first_stat(alpha: complex):
    return lambda h: hecke_L(h, 0.5 + alpha, "reflected")


def _neg_stat(beta: complex):
    def f(h):
        den = hecke_L(h, 0.5 + beta, "reflected")
        if abs(den) < L_GUARD:
            raise IllConditionedError(f"|L(1/2+beta)| = {abs(den):.2e} below guard")
        return 1.0 / den

    return f


def _logd_stat(r: complex):
    return lambda h: log_deriv(h, 0.5 + r)


def _combine(fw: FamilyWindow, vals: list) -> tuple[complex, list]:
    terms = [lam * w * v for lam, w, v in zip(fw.lam, fw.weights, vals) if v is not None]
    return _fsum_c(terms), terms


def _q_pair(stat_at, shifts: tuple):
    """chi and conj chi together: r(conj chi; s) = conj(r(chi; conj s))."""

    def f(h):
        v1 = stat_at(*shifts)(h)
        v2 = stat_at(*[complex(x).conjugate() for x in shifts])(h)
        return v1 + v2.conjugate()

    return f


def _report(kind, X, shifts, fw, vals, flags, main, exponent, weight, side, extras=None) -> MomentReport:
    lhs, terms = _combine(fw, vals)
    ratio = lhs / main if main != 0 else None
    ex = {"terms": len(terms), "window": list(weight.support), "side": side}
    if extras:
        ex.update(extras)
    rep = MomentReport(kind, float(X), shifts, lhs, complex(main), ratio, exponent, family_size(X), weight.name, flags, ex)
    rep._terms = (fw, vals)  # not serialised; used by --dump-terms
    return rep


def _cached_report(key_params: dict, build) -> MomentReport:
    key = cache.cache_key("moment", **key_params)
    text = cache.read(key)
    if text is not None:
        return MomentReport.from_json(text)
    rep = build()
    cache.write(key, rep.to_json())
    return rep


# ---------------------------------------------------------------- K side theorems


def _zeta_ratio_K(alpha, beta) -> complex:
    return zeta_K_j(1.5 + 3 * alpha) / zeta_K_j(1.5 + 2 * alpha + beta)


def ratios_main_term(X, alpha, beta, weight: WeightFunction, q_side: bool = False) -> complex:
    alpha, beta = _shift(alpha), _shift(beta)
    z = zeta_j if q_side else zeta_K_j
    lead = (2 if q_side else 1) * weight.mellin(1).real * X / H9
    return lead * (1 - 3 ** (-0.5 - beta)) / (1 - 3 ** (-0.5 - alpha)) * z(1.5 + 3 * alpha) / z(1.5 + 2 * alpha + beta)


def ratios_sum(X: float, alpha, beta, weight: WeightFunction | str = "bump") -> MomentReport:
    alpha, beta = _shift(alpha), _shift(beta)
    weight = get_weight(weight) if isinstance(weight, str) else weight
    _check(alpha.real > -1 / 11, "Re(alpha) must exceed -1/11")
    _check(beta.real > 0, "Re(beta) must be positive")
    E = error_exponent(alpha, beta)
    _check(E.E < 1, f"E(alpha, beta) = {E.E} is not below 1")

    def build():
        fw = family_window(X, weight)
        vals, flags = _member_terms(fw, "K", _ratio_stat(alpha, beta))
        main = ratios_main_term(X, alpha, beta, weight)
        extras = {"prime_sum": weighted_prime_sum(X, weight)}
        return _report("ratios", X, (alpha, beta), fw, vals, flags, main, E, weight, "K", extras)

    return _cached_report(dict(kind="ratios", X=X, a=repr(alpha), b=repr(beta), w=weight.name), build)


def first_moment(X: float, alpha, weight: WeightFunction | str = "bump") -> MomentReport:
    alpha = _shift(alpha)
    weight = get_weight(weight) if isinstance(weight, str) else weight
    _check(alpha.real > -1 / 11, "Re(alpha) must exceed -1/11")
    E = error_exponent(alpha)

    def build():
        fw = family_window(X, weight)
        vals, flags = _member_terms(fw, "K", _first_stat(alpha))
        main = weight.mellin(1).real * X / H9 * zeta_K_j(1.5 + 3 * alpha) / (1 - 3 ** (-0.5 - alpha))
        return _report("first", X, (alpha,), fw, vals, flags, main, E, weight, "K")

    return _cached_report(dict(kind="first", X=X, a=repr(alpha), w=weight.name), build)


def negative_moment(X: float, beta, weight: WeightFunction | str = "bump") -> MomentReport:
    beta = _shift(beta)
    weight = get_weight(weight) if isinstance(weight, str) else weight
    _check(beta.real > 0, "Re(beta) must be positive")
    E = ShiftExponent(complex(SHIFT_INF), beta, max(0.5, 1 - beta.real), 0.0)

    def build():
        fw = family_window(X, weight)
        vals, flags = _member_terms(fw, "K", _neg_stat(beta))
        main = weight.mellin(1).real * X / H9 * (1 - 3 ** (-0.5 - beta))
        extras = {"prime_sum": weighted_prime_sum(X, weight)}
        return _report("negative", X, (beta,), fw, vals, flags, main, E, weight, "K", extras)

    return _cached_report(dict(kind="negative", X=X, b=repr(beta), w=weight.name), build)


def logderiv_main_factor(r, q_side: bool = False) -> tuple[complex, float]:
    """(zeta^(j))'/zeta^(j)(3/2 + 3r) - log 3/(3^(1/2+r) - 1), derivative by central differences.

    Returns (value, |difference between steps 1e-6 and 2e-6|).
    """
    z = zeta_j if q_side else zeta_K_j
    s = 1.5 + 3 * complex(r)
    d, err = central_diff(z, s, 1e-6)
    return d / z(s) - LOG3 / (3 ** (0.5 + complex(r)) - 1), err


def logderiv_moment(X: float, r, weight: WeightFunction | str = "bump") -> MomentReport:
    r = _shift(r)
    weight = get_weight(weight) if isinstance(weight, str) else weight
    _check(0 < r.real < 0.5, "need 0 < Re(r) < 1/2")
    E = ShiftExponent(r, r, 1 - r.real, 0.0)

    def build():
        fw = family_window(X, weight)
        vals, flags = _member_terms(fw, "K", _logd_stat(r))
        fac, err = logderiv_main_factor(r)
        main = weight.mellin(1).real * X / H9 * fac
        exact = zeta_K_j_logderiv_exact(1.5 + 3 * r) - LOG3 / (3 ** (0.5 + r) - 1)
        extras = {"fd_step_gap": err, "main_factor_exact": complex(exact)}
        return _report("logderiv", X, (r,), fw, vals, flags, main, E, weight, "K", extras)

    return _cached_report(dict(kind="logderiv", X=X, r=repr(r), w=weight.name), build)


# ---------------------------------------------------------------- triple series and Mellin check


def mds_terms(s, w, z, X: float) -> tuple[np.ndarray, np.ndarray]:
    """(norms, Lambda_K L(w)/(N^s L(z))) for family members with N <= X (no weight)."""
    s, w, z = complex(s), complex(w), complex(z)
    _check(w.real >= 0.5 and z.real > 0.5, "need Re(w) >= 1/2 and Re(z) > 1/2")
    if X < 2:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=complex)
    rows, g = gauss_table_cached(int(X), family_only=True)
    out = []
    for row, gv in zip(rows, g):
        h = _handle(row, gv, "K")
        den = hecke_L(h, z, "reflected")
        if abs(den) < L_GUARD:
            raise IllConditionedError(f"{format_eis(h.character.pi)}: |L(z)| below guard")
        n = float(row[2])
        out.append(math.log(n) * hecke_L(h, w, "reflected") / den * n ** (-s))
    return rows[:, 2].copy(), np.array(out, dtype=complex)


def mds_partial(s, w, z, X: float) -> complex:
    """Truncated triple series sum_{N(pi) <= X} Lambda_K(pi) L(w, chi_pi) / (N(pi)^s L(z, chi_pi))."""
    _, t = mds_terms(s, w, z, X)
    return _fsum_c(t)


def ratios_via_mellin(X: float, alpha, beta, weight: WeightFunction | str = "bump", c: float = 2.0, T: float = 400.0, n: int = 40001):
    """(1/2 pi i) int_(c) A(s) X^s hat w(s) ds with A truncated at 2X, by the trapezoid rule.

    Equals the weighted ratios sum up to quadrature error, since the truncation
    contains the whole support of w(N/X).
    """
    weight = get_weight(weight) if isinstance(weight, str) else weight
    alpha, beta = _shift(alpha), _shift(beta)
    norms, base = mds_terms(0.0, 0.5 + alpha, 0.5 + beta, weight.support[1] * X)
    t = np.linspace(-T, T, n)
    s = c + 1j * t
    logn = np.log(norms.astype(float))
    A = np.concatenate([(base[None, :] * np.exp(-np.outer(s[i : i + 4096], logn))).sum(axis=1) for i in range(0, n, 4096)])
    integrand = A * np.exp(s * math.log(X)) * weight.mellin_many(s)
    dt = t[1] - t[0]
    val = (integrand.sum() - 0.5 * (integrand[0] + integrand[-1])) * dt / (2 * math.pi)
    direct = _fsum_c(base * weight(norms / X))
    return complex(val), direct


# ---------------------------------------------------------------- residue identity


def residue_identity(w, z, cutoff: int = 10**5) -> tuple[complex, complex]:
    """(Euler-product side, closed form) of the residue at s = 1."""
    w, z = complex(w), complex(z)
    _check(w.real > 1 / 3 and (2 * w + z).real > 1, "need Re(w) > 1/3 and Re(2w + z) > 1")
    pref = (1 - 3 ** (-z)) / (1 - 3 ** (-w)) / H9
    ps = rational_primes(int(cutoff)).astype(np.float64)
    # prime ideals coprime to 3: two of norm p for p = 1 mod 3, one of norm q^2 for q = 2 mod 3
    split = ps[ps % 3 == 1]
    inert = ps[ps % 3 == 2] ** 2
    inert = inert[inert <= cutoff]
    N = np.concatenate([split, split, inert])

    def factor(N):
        a = np.exp(-3 * w * np.log(N))
        return 1 + (1 - np.exp((w - z) * np.log(N))) * a / (1 - a)

    log_prod = np.log(factor(N)).sum()
    lhs = pref * cmath.exp(complex(log_prod))
    rhs = pref * zeta_K_j(3 * w) / zeta_K_j(2 * w + z)
    return complex(lhs), complex(rhs)


# ---------------------------------------------------------------- one-level density


def density_height(X: float, a: float) -> float:
    return min(a * math.log(X) * 50 / (2 * math.pi), MAX_T)


def _psi_term(L: float, h, a: float, q_side: bool, coeff: float = 1.0) -> float:
    """(1/L) int h(u) (psi(b + c i u) + psi(b - c i u)) du, b = 1/2 (K) or 1/4 (Q)."""
    b, c = (0.25, math.pi / L) if q_side else (0.5, 2 * math.pi / L)
    f = lambda u: np.asarray(h(u)) * 2 * special.psi(b + 1j * c * np.asarray(u)).real
    # tail: h averages 1/(2 pi^2 a^2 u^2) and psi pair ~ 2 log(c u)
    tail = lambda U: (math.log(c * U) + 1) / (math.pi**2 * a**2 * U)
    return coeff * integrate_even(f, 1 / a, 600, tail) / L


def _zeta_term(L: float, h, a: float, q_side: bool) -> float:
    """int h(u) [(zeta^(j))'/zeta^(j)(3/2 + 6 pi i u/L) - log3/(3^(1/2 + 2 pi i u/L) - 1)] du."""
    x, wts = np.polynomial.legendre.leggauss(24)
    period = 1 / a
    periods = 120
    edges = np.arange(periods + 1) * period
    nodes = (0.5 * period * x[None, :] + 0.5 * (edges[:-1] + edges[1:])[:, None]).ravel()
    weights = np.tile(0.5 * period * wts, periods)
    vals = np.empty(nodes.size)
    for i, u in enumerate(nodes):
        s = 1.5 + 6j * math.pi * u / L
        if q_side:
            mp = mpmath.mpc(s)
            ld = complex(mpmath.zeta(mp, 1, 1) / mpmath.zeta(mp)) + LOG3 / (3**s - 1)
        else:
            ld = zeta_K_j_logderiv_exact(s)
        g = ld - LOG3 / (3 ** (0.5 + 2j * math.pi * u / L) - 1)
        vals[i] = 2 * g.real  # the integrand at -u is the conjugate
    return float(np.dot(weights, np.asarray(h(nodes)) * vals))


def density_asymptotic(X: float, a: float, weight: WeightFunction, q_side: bool = False) -> dict:
    """Leading term and the 1/log X correction of the asymptotic density formula."""
    hf = fejer_pair(a)
    L = math.log(X)
    z = zeta_j if q_side else zeta_K_j
    d, _ = central_diff(z, 1.5, 1e-6)
    zeta_ld = (d / z(1.5)).real
    what1 = weight.mellin(1).real
    bracket = (
        2 * zeta_ld
        - 2 * LOG3 / (math.sqrt(3) - 1)
        + weight.log_moment() / what1
        + 2 * special.psi(0.25 if q_side else 0.5)
        + (math.log(1 / math.pi) if q_side else math.log(3 / (4 * math.pi**2)))
    )
    # one side of the tail: h averages 1/(2 pi^2 a^2 u^2)
    lead = integrate_even(lambda x: hf(x), 1 / a, 2000, lambda U: 1 / (2 * math.pi**2 * a**2 * U))
    return {"leading": lead, "correction": 2 * hf.hat_at_1 / L * bracket, "bracket": bracket}


def one_level_density(X: float, a: float, weight: WeightFunction | str = "bump", q_side: bool = False, strict: bool = True) -> MomentReport:
    """D(X; h) for the Fejer pair with Fourier support [-a, a], from explicit zero lists."""
    weight = get_weight(weight) if isinstance(weight, str) else weight
    _check(a > 0, "support a must be positive")
    _check(X > 3, "X too small")

    def build():
        return _density(X, a, weight, q_side, strict)

    kind = "q_density" if q_side else "density"
    return _cached_report(dict(kind=kind, X=X, a=repr(float(a)), w=weight.name), build)


def _density(X, a, weight, q_side, strict) -> MomentReport:
    hf = fejer_pair(a)
    L = math.log(X)
    T = density_height(X, a)
    side = "Q" if q_side else "K"
    fw = family_window(X, weight, split_only=q_side)
    flags = []
    zsum, counts, tails = [], [], []
    for row, g in zip(fw.rows, fw.gauss):
        h = _handle(row, g, side)
        zl = find_zeros(h, T, strict=False)
        if zl.status != "ok":
            msg = f"zero finder failed for {format_eis(h.character.pi)} (N = {h.conductor_norm}): {zl.status}"
            if strict:
                raise NumericGuardError(msg)
            flags.append(msg)
        g_arr = np.array(zl.ordinates, dtype=float)
        val = float(np.sum(hf(g_arr * L / (2 * math.pi)))) if g_arr.size else 0.0
        if q_side:
            val *= 2  # conj chi has the mirrored zeros and h is even
        zsum.append(val)
        counts.append(len(zl))
        # zeros above T: density log(Qc^2 t^2)/(2 pi) each side, h ~ 1/(2 pi^2 a^2 x^2)
        xT = T * L / (2 * math.pi)
        dens_x = math.log(h.qscale**2 * T**2 / h.degree**2) / L
        tails.append((2 if q_side else 1) * 2 * dens_x / (2 * math.pi**2 * a**2 * xT))
    mult = 2.0 if q_side else 1.0  # Lambda(p) over both characters
    lw = fw.lam * fw.weights * mult
    F = math.fsum(lw.tolist())
    if F == 0:
        raise PreconditionError("empty family window")
    lhs = math.fsum((lw * np.array(zsum)).tolist()) / F
    tail_est = math.fsum((lw * np.array(tails)).tolist()) / F

    # the four-line finite form
    what1 = weight.mellin(1).real
    t1 = 2 * hf.hat_at_1 / (F * L) * math.fsum((lw * fw.lam).tolist())
    zc = (4 if q_side else 2) * what1 / H9
    t2 = zc * X / L * _zeta_term(L, hf, a, q_side) / F
    t3 = _psi_term(L, hf, a, q_side)
    t4 = 2 * hf.hat_at_1 / L * (math.log(1 / math.pi) if q_side else math.log(3 / (4 * math.pi**2)))
    finite = t1 + t2 + t3 + t4
    asym = density_asymptotic(X, a, weight, q_side)
    asym_total = asym["leading"] + asym["correction"]
    extras = {
        "finite_form": finite,
        "finite_terms": [t1, t2, t3, t4],
        "asymptotic": asym_total,
        "asymptotic_leading": asym["leading"],
        "asymptotic_correction": asym["correction"],
        "height": T,
        "zeros": int(sum(counts)),
        "zero_tail_estimate": tail_est,
        "imag_part": 0.0,
        "family_weight_F": F,
        "h_integral": hf.integral,
    }
    if q_side:
        # gamma-factor term with the coefficient 1/2 that the degree-2 explicit formula gives
        extras["finite_form_half_psi"] = t1 + t2 + 0.5 * t3 + t4
    if a >= 1:
        flags.append("a >= 1: the asymptotic form is outside its range")
    kind = "q_density" if q_side else "density"
    rep = MomentReport(kind, float(X), (float(a),), complex(lhs), complex(asym_total), complex(lhs / asym_total),
                       None, family_size(X), weight.name, flags, extras)
    return rep


# ---------------------------------------------------------------- Q side


def q_side_suite(Q: float, kind: str, shifts: tuple = (), weight: WeightFunction | str = "bump") -> MomentReport:
    """Q-side analogues: kind in q_ratios, q_first, q_negative, q_logderiv, q_density."""
    weight = get_weight(weight) if isinstance(weight, str) else weight
    shifts = tuple(_shift(s) for s in shifts)
    if kind == "q_density":
        return one_level_density(Q, float(shifts[0].real) if shifts else 0.5, weight, q_side=True)
    what1 = weight.mellin(1).real
    lead = 2 * what1 * Q / H9
    if kind == "q_ratios":
        alpha, beta = shifts
        _check(alpha.real > -1 / 11 and beta.real > 0, "need Re(alpha) > -1/11, Re(beta) > 0")
        E = error_exponent(alpha, beta)
        _check(E.E < 1, f"E(alpha, beta) = {E.E} is not below 1")
        stat = _q_pair(_ratio_stat, (alpha, beta))
        main = ratios_main_term(Q, alpha, beta, weight, q_side=True)
    elif kind == "q_first":
        (alpha,) = shifts
        _check(alpha.real > -1 / 11, "Re(alpha) must exceed -1/11")
        E = error_exponent(alpha)
        stat = _q_pair(_first_stat, (alpha,))
        main = lead * zeta_j(1.5 + 3 * alpha) / (1 - 3 ** (-0.5 - alpha))
    elif kind == "q_negative":
        (beta,) = shifts
        _check(beta.real > 0, "Re(beta) must be positive")
        E = ShiftExponent(complex(SHIFT_INF), beta, max(0.5, 1 - beta.real), 0.0)
        stat = _q_pair(_neg_stat, (beta,))
        main = lead * (1 - 3 ** (-0.5 - beta))
    elif kind == "q_logderiv":
        (r,) = shifts
        _check(0 < r.real < 0.5, "need 0 < Re(r) < 1/2")
        E = ShiftExponent(r, r, 1 - r.real, 0.0)
        stat = _q_pair(_logd_stat, (r,))
        main = lead * logderiv_main_factor(r, q_side=True)[0]
    else:
        raise PreconditionError(f"unknown Q-side kind {kind!r}")

    def build():
        fw = family_window(Q, weight, split_only=True)
        vals, flags = _member_terms(fw, "Q", stat)
        return _report(kind, Q, shifts, fw, vals, flags, main, E, weight, "Q")

    return _cached_report(dict(kind=kind, X=Q, sh=repr(shifts), w=weight.name), build)


def dump_terms_csv(rep: MomentReport) -> str:
    """Per-prime contributions of a freshly computed report."""
    fw, vals = getattr(rep, "_terms", (None, None))
    if fw is None:
        raise ValueError("report has no attached terms (loaded from cache?)")
    lines = ["a,b,norm,weight,lambda,re,im"]
    for row, w, lam, v in zip(fw.rows.tolist(), fw.weights, fw.lam, vals):
        if v is None:
            continue
        lines.append(f"{row[0]},{row[1]},{row[2]},{float(w)!r},{float(lam)!r},{v.real!r},{v.imag!r}")
    return "\n".join(lines) + "\n"
