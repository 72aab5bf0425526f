"""The acceptance battery: one check per criterion, each returning a CheckResult."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

import numpy as np

from .analytic import fejer_pair
from .eisenstein import ONE, UNITS, EisensteinInt, divides, norm, residues
from .gauss import cancellation_exponent, gauss_sum
from .lfunctions import _log_gamma_factor, completed_L, find_zeros, induced_tau, make_handle
from .moments import first_moment, one_level_density, ratios_sum, residue_identity
from .primes import chebyshev_family, primary_prime_table, sieve_family
from .symbols import W, ray_class_group9, symbol_exponent, symbol_prime

SEED = 20240601


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} [{self.number:2d}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(number: int, name: str, fn) -> CheckResult:
    t = time.perf_counter()
    ok, detail = fn()
    return CheckResult(number, name, bool(ok), detail, time.perf_counter() - t)


def _random_element(rng: random.Random, bound: int) -> EisensteinInt:
    while True:
        z = EisensteinInt(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if z.a or z.b:
            return z


def check_reciprocity(pairs: int = 10_000, max_norm: int = 10**6):
    rng = random.Random(SEED)
    table = primary_prime_table(max_norm)
    mismatches = 0
    t0 = time.perf_counter()
    for _ in range(pairs):
        a, b, _, _ = table[rng.randrange(len(table))].tolist()
        pi = EisensteinInt(a, b)
        x = _random_element(rng, 10**6)
        if symbol_exponent(x, pi) != symbol_prime(x, pi).code():
            mismatches += 1
    dt = time.perf_counter() - t0
    return mismatches == 0 and dt < 60, f"{mismatches} mismatches in {pairs} pairs, {dt:.1f}s"


def check_gauss_magnitude(limit: int = 10**4):
    worst = 0.0
    fam = sieve_family(limit)
    t0 = time.perf_counter()
    for p in fam:
        g = gauss_sum(ONE, p.pi).value
        worst = max(worst, abs(abs(g) ** 2 - p.norm) / p.norm)
    dt = time.perf_counter() - t0
    return worst <= 1e-6 and dt < 120, f"max ||g|^2 - N|/N = {worst:.2e} over {len(fam)} primes, {dt:.1f}s"


def check_twisting(triples: int = 100, max_norm: int = 3000):
    rng = random.Random(SEED + 3)
    table = primary_prime_table(max_norm)
    worst = 0.0
    for _ in range(triples):
        a, b, _, _ = table[rng.randrange(len(table))].tolist()
        pi = EisensteinInt(a, b)
        while True:
            r, s = _random_element(rng, 50), _random_element(rng, 50)
            if not divides(pi, r) and not divides(pi, s):
                break
        lhs = gauss_sum(r * s, pi).value
        e = symbol_exponent(s, pi)
        rhs = W ** ((-e) % 3) * gauss_sum(r, pi).value
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return worst < 1e-8, f"max relative error {worst:.2e} over {triples} triples"


def check_functional_equation(primes: int = 20, points: int = 20, max_norm: int = 5000):
    rng = np.random.default_rng(SEED + 4)
    fam = sieve_family(max_norm)[:primes]
    worst = 0.0
    for p in fam:
        h = make_handle(p.pi)
        hb = h.bar()
        for _ in range(points):
            s = complex(rng.uniform(-1.0, 2.0), rng.uniform(-50, 50))
            lhs = completed_L(h, s, A=1.25)
            rhs = h.root_number * completed_L(hb, 1 - s, A=0.8)
            # in units of the larger gamma factor: an error in L on the Re >= 1/2 side
            scale = max(abs(np.exp(_log_gamma_factor(h, s))), abs(np.exp(_log_gamma_factor(h, 1 - s))))
            worst = max(worst, abs(lhs - rhs) / scale)
    return worst < 1e-6, f"max residual {worst:.2e} over {len(fam)} primes x {points} points"


def check_tau_identity(limit: int = 10**4):
    fam = [p for p in sieve_family(limit) if p.splitting == "split"]
    worst = 0.0
    for p in fam:
        worst = max(worst, abs(induced_tau(p.pi) - gauss_sum(ONE, p.pi).value))
    return worst < 1e-8, f"max |tau - g| = {worst:.2e} over {len(fam)} split primes"


def check_ray_class():
    G = ray_class_group9()
    bad = 0
    count = 0
    for x in residues(EisensteinInt(9)):
        if norm(x) % 3 == 0:
            continue
        count += 1
        want = 1.0 if _is_one_mod9(x) else 0.0
        if abs(G.detector(x) - want) > 1e-12:
            bad += 1
    return G.order == 9 and bad == 0, f"order {G.order}, {bad} detector mismatches on {count} residues"


def _is_one_mod9(x: EisensteinInt) -> bool:
    # the ideal (x) has a generator = 1 mod 9
    return any(((u * x).a - 1) % 9 == 0 and (u * x).b % 9 == 0 for u in UNITS)


def check_residue_identity():
    lhs, rhs = residue_identity(0.9, 1.1, 10**5)
    err = abs(lhs - rhs)
    return err < 1e-5, f"|Euler - zeta ratio| = {err:.2e}"


def check_prime_counting():
    d5 = abs(9 * chebyshev_family(1e5) / 1e5 - 1)
    d6 = abs(9 * chebyshev_family(1e6) / 1e6 - 1)
    return d6 <= 0.03 and d6 < d5, f"|9 theta/y - 1| = {d5:.4f} at 1e5, {d6:.4f} at 1e6"


def check_first_moment():
    r5 = first_moment(1e5, 0).ratio
    r6 = first_moment(1e6, 0).ratio
    ok = 0.6 <= r5.real <= 1.4 and abs(r6 - 1) < abs(r5 - 1)
    return ok, f"ratio {r5.real:.4f} at 1e5, {r6.real:.4f} at 1e6"


def check_ratios():
    a = ratios_sum(1e5, 0.2, 0.2)
    b = ratios_sum(4e5, 0.2, 0.2)
    exact = max(abs(r.lhs - r.extras["prime_sum"]) / r.extras["prime_sum"] for r in (a, b))
    ok = 0.5 <= a.ratio.real <= 1.5 and abs(b.ratio - 1) < abs(a.ratio - 1) and exact <= 1e-10
    return ok, f"ratio {a.ratio.real:.4f} at 1e5, {b.ratio.real:.4f} at 4e5, alpha=beta deviation {exact:.1e}"


def check_density():
    rep = one_level_density(1e4, 0.5)
    D = rep.lhs.real
    pred = rep.main_term.real
    lead = rep.extras["asymptotic_leading"]
    ok = abs(D - pred) <= 0.1 and abs(lead - fejer_pair(0.5).integral) < 1e-6
    return ok, (
        f"D = {D:.4f}, asymptotic = {pred:.4f} (|diff| {abs(D - pred):.3f}), "
        f"finite form = {rep.extras['finite_form']:.4f}, leading = {lead:.8f}"
    )


def check_cancellation():
    slope, *_ = cancellation_exponent(ONE, 0.5, 1e3, 1e6)
    return slope <= 0.95, f"fitted exponent {slope:.4f}"


def check_zero_counts(handles: int = 10, T: float = 20.0):
    fam = sieve_family(5000)[:handles]
    lines = []
    ok = True
    for p in fam:
        zl = find_zeros(make_handle(p.pi), T, strict=False)
        if zl.status != "ok" or len(zl) != zl.verified_count:
            ok = False
        lines.append(f"{len(zl)}/{zl.verified_count}")
    return ok, "refined/contour: " + ", ".join(lines)


CHECKS = [
    (1, "reciprocity vs exponentiation", check_reciprocity),
    (2, "Gauss sum magnitude", check_gauss_magnitude),
    (3, "twisting law", check_twisting),
    (4, "functional equation", check_functional_equation),
    (5, "tau identity", check_tau_identity),
    (6, "ray class group mod 9", check_ray_class),
    (7, "residue identity", check_residue_identity),
    (8, "prime counting", check_prime_counting),
    (9, "first moment", check_first_moment),
    (10, "ratios sum", check_ratios),
    (11, "one-level density", check_density),
    (12, "Gauss sum cancellation", check_cancellation),
    (13, "zero finder soundness", check_zero_counts),
]

CORE = {1, 2, 3, 4, 5, 6}


def run(number: int) -> CheckResult:
    for n, name, fn in CHECKS:
        if n == number:
            return _timed(n, name, fn)
    raise KeyError(number)


def run_suite(suite: str = "all", echo=print) -> list[CheckResult]:
    wanted = CORE if suite == "core" else {n for n, _, _ in CHECKS}
    out = []
    for n, name, fn in CHECKS:
        if n in wanted:
            res = _timed(n, name, fn)
            echo(res.line())
            out.append(res)
    return out
