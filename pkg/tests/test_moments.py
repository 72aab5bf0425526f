import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubic_hecke.analytic import BUMP, zeta_K_j
from cubic_hecke.lfunctions import hecke_L, make_handle
from cubic_hecke.moments import (
    MomentReport, PreconditionError, dump_terms_csv, first_moment, logderiv_main_factor, logderiv_moment,
    negative_moment, q_side_suite, ratios_main_term, ratios_sum, ratios_via_mellin, residue_identity,
    weighted_prime_sum,
)
from cubic_hecke.primes import sieve_family

X = 3000.0


def brute_first_moment(X, alpha):
    total = []
    for p in sieve_family(2 * X):
        w = float(BUMP(p.norm / X))
        if w > 0:
            total.append(math.log(p.norm) * w * hecke_L(make_handle(p.pi), 0.5 + alpha))
    return complex(math.fsum(z.real for z in total), math.fsum(z.imag for z in total))


def test_first_moment_against_independent_loop(tmp_cache):
    rep = first_moment(X, 0.1 + 0.5j)
    assert abs(rep.lhs - brute_first_moment(X, 0.1 + 0.5j)) < 1e-9 * abs(rep.lhs)
    assert rep.kind == "first" and rep.family_size == len(sieve_family(X))


def test_equal_shifts_are_exact(tmp_cache):
    rep = ratios_sum(X, 0.3, 0.3)
    assert abs(rep.lhs - rep.extras["prime_sum"]) <= 1e-10 * rep.extras["prime_sum"]
    assert abs(rep.main_term - BUMP.mellin(1).real * X / 9) < 1e-9 * X


@given(st.floats(0.01, 2), st.floats(-5, 5))
@settings(max_examples=30)
def test_main_term_collapses_on_diagonal(x, y):
    a = complex(x, y)
    assert abs(ratios_main_term(1e4, a, a, BUMP) - BUMP.mellin(1).real * 1e4 / 9) < 1e-9 * 1e4


def test_weight_rescaling_leaves_ratio(tmp_cache):
    a = first_moment(X, 0.2)
    b = first_moment(X, 0.2, weight=BUMP.scaled(3.0))
    assert abs(b.lhs - 3 * a.lhs) < 1e-10 * abs(b.lhs)
    assert abs(b.ratio - a.ratio) < 1e-10


def test_large_beta_negative_moment_tends_to_prime_sum(tmp_cache):
    rep = negative_moment(X, 5.0)
    assert abs(rep.lhs / rep.extras["prime_sum"] - 1) < 0.01
    assert abs(rep.main_term.imag) < 1e-12


def test_mellin_route_matches_direct_sum(tmp_cache):
    contour, direct = ratios_via_mellin(1000.0, 0.2 + 1j, 0.3)
    assert abs(contour - direct) < 1e-6 * abs(direct)


@pytest.mark.parametrize("w,z", [(0.9, 1.1), (0.7, 0.8), (1.2 + 0.5j, 0.9 - 0.3j)])
def test_residue_identity(w, z):
    lhs, rhs = residue_identity(w, z, 10**5)
    assert abs(lhs - rhs) < 1e-5


def test_residue_identity_diagonal_is_one_ninth():
    lhs, rhs = residue_identity(0.8, 0.8)
    assert lhs == pytest.approx(1 / 9, abs=1e-15) and rhs == pytest.approx(1 / 9, abs=1e-14)


def test_logderiv_main_factor_two_ways():
    for r in (0.05, 0.2 + 0.4j, 0.45):
        fd, gap = logderiv_main_factor(r)
        s = 1.5 + 3 * complex(r)
        h = 1e-5
        alt = (zeta_K_j(s + h) - zeta_K_j(s - h)) / (2 * h) / zeta_K_j(s) - math.log(3) / (3 ** (0.5 + complex(r)) - 1)
        assert abs(fd - alt) < 1e-6 and gap < 1e-6


def test_q_side_real_for_real_shifts(tmp_cache):
    for kind, sh in [("q_first", (0.1,)), ("q_ratios", (0.2, 0.4)), ("q_negative", (0.5,)), ("q_logderiv", (0.3,))]:
        rep = q_side_suite(X, kind, sh)
        assert abs(rep.lhs.imag) < 1e-10 * abs(rep.lhs.real)
    rep = q_side_suite(X, "q_ratios", (0.25, 0.25))
    assert abs(rep.lhs - weighted_prime_sum(X, BUMP, q_side=True)) < 1e-10 * abs(rep.lhs)


def test_report_json_roundtrip(tmp_cache):
    rep = logderiv_moment(X, 0.3)
    back = MomentReport.from_json(rep.to_json())
    assert back.to_json() == rep.to_json()
    assert abs(rep.extras["main_factor_exact"] - logderiv_main_factor(0.3)[0]) < 1e-7


def test_dump_terms(tmp_cache):
    rep = first_moment(X, 0.0)
    lines = dump_terms_csv(rep).splitlines()
    assert lines[0] == "a,b,norm,weight,lambda,re,im"
    assert len(lines) - 1 == rep.extras["terms"]
    tot = complex(math.fsum(float(l.split(",")[3]) * float(l.split(",")[4]) * float(l.split(",")[5]) for l in lines[1:]), 0)
    assert abs(tot.real - rep.lhs.real) < 1e-9 * abs(rep.lhs)


@pytest.mark.parametrize("call", [
    lambda: first_moment(X, -0.1),
    lambda: negative_moment(X, 0.0),
    lambda: logderiv_moment(X, 0.5),
    lambda: ratios_sum(X, 0.0, -0.1),
    lambda: residue_identity(0.3, 1.0),
    lambda: q_side_suite(X, "q_bogus", ()),
])
def test_preconditions(call):
    with pytest.raises(PreconditionError):
        call()
