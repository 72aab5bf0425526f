"""numba kernels: additive-character tables, Gauss sums over finite fields,
the incomplete gamma function along a ray, and the Hecke ideal table."""

from __future__ import annotations

import math

import numpy as np
from numba import njit

TWO_PI = 2.0 * math.pi
_RESYNC = 1024


@njit(cache=True)
def cos_table(p):
    """cos(2 pi k / p) for k = 0..p-1 by rotation with periodic resync."""
    out = np.empty(p)
    step = TWO_PI / p
    cs, sn = math.cos(step), math.sin(step)
    c, s = 1.0, 0.0
    for k in range(p):
        if k % _RESYNC == 0:
            c, s = math.cos(step * k), math.sin(step * k)
        out[k] = c
        c, s = c * cs - s * sn, s * cs + c * sn
    return out


@njit(cache=True)
def exp_table(p):
    """e(k/p) for k = 0..p-1."""
    out = np.empty(p, dtype=np.complex128)
    step = TWO_PI / p
    cs, sn = math.cos(step), math.sin(step)
    c, s = 1.0, 0.0
    for k in range(p):
        if k % _RESYNC == 0:
            c, s = math.cos(step * k), math.sin(step * k)
        out[k] = complex(c, s)
        c, s = c * cs - s * sn, s * cs + c * sn
    return out


@njit(cache=True)
def half_cos_table32(p):
    """float32 cos(2 pi k / p) for k = 0..p//2; enough to pick a cube root."""
    m = p // 2 + 1
    out = np.empty(m, dtype=np.float32)
    step = TWO_PI / p
    cs, sn = math.cos(step), math.sin(step)
    c, s = 1.0, 0.0
    for k in range(m):
        if k % _RESYNC == 0:
            c, s = math.cos(step * k), math.sin(step * k)
        out[k] = c
        c, s = c * cs - s * sn, s * cs + c * sn
    return out


@njit(cache=True)
def cubic_period_sum(p):
    """sum_{y=1}^{p-1} cos(2 pi y^3 / p), single precision terms.

    Real because y -> -y conjugates; cubes are stepped by finite differences.
    """
    tab = half_cos_table32(p)
    half_p = p // 2
    c = 1  # y^3 at y = 1
    d = 7 % p  # (y+1)^3 - y^3 = 3y^2 + 3y + 1 at y = 1
    e = 12 % p  # d(y+1) - d(y) = 6y + 6 at y = 1
    acc = 0.0
    for y in range(1, (p - 1) // 2 + 1):
        acc += tab[c if c <= half_p else p - c]
        c += d
        if c >= p:
            c -= p
        d += e
        if d >= p:
            d -= p
        e += 6
        if e >= p:
            e -= p
    return 2.0 * acc


@njit(cache=True)
def coset_bins(p, g, v):
    """A_j = sum over k = j mod 3 of e(v g^k / p), k = 0..p-2."""
    tab = exp_table(p)
    out = np.zeros(3, dtype=np.complex128)
    x = v % p
    for k in range(p - 1):
        out[k % 3] += tab[x]
        x = (x * g) % p
    return out


@njit(cache=True)
def inert_bins(q, gx, gy):
    """For F_q[w]: bins over k mod 3 of e(-y_k / q), (x_k + y_k w) = gamma^k."""
    tab = exp_table(q)
    out = np.zeros(3, dtype=np.complex128)
    x, y = 1, 0
    n = q * q - 1
    for k in range(n):
        out[k % 3] += tab[(q - y) % q]
        # (x + y w)(gx + gy w) with w^2 = -1 - w
        nx = (x * gx - y * gy) % q
        ny = (x * gy + y * gx - y * gy) % q
        x, y = nx, ny
    return out


# ------------------------------------------------------------------ incomplete gamma

_GL4_X, _GL4_W = np.polynomial.legendre.leggauss(4)
_GL8_X, _GL8_W = np.polynomial.legendre.leggauss(8)


@njit(cache=True)
def _segment(a, delta, lo, hi, want_d, nodes_x, nodes_w):
    """(int, int log t) of t^(a-1) e^(-t) over the ray piece t = r e^{i delta}, r in [lo, hi]."""
    eid = complex(math.cos(delta), math.sin(delta))
    mid = 0.5 * (hi + lo)
    half = 0.5 * (hi - lo)
    s0 = 0j
    s1 = 0j
    for i in range(nodes_x.size):
        r = mid + half * nodes_x[i]
        lt = complex(math.log(r), delta)
        f = np.exp((a - 1.0) * lt - r * eid) * nodes_w[i]
        s0 += f
        if want_d:
            s1 += f * lt
    return s0 * half * eid, s1 * half * eid


@njit(cache=True)
def upper_gamma_ray(a, radii, delta, r_end, want_d):
    """Gamma(a, r e^{i delta}) and d/da of it, for ascending radii > 0.

    Integrates backwards from r_end (where the integrand is negligible) and
    accumulates, so one pass serves every radius.
    """
    n = radii.size
    g = np.zeros(n, dtype=np.complex128)
    dg = np.zeros(n, dtype=np.complex128)
    am1 = abs(a - 1.0)
    acc0 = 0j
    acc1 = 0j
    hi = max(r_end, radii[n - 1])
    for idx in range(n - 1, -1, -1):
        lo = radii[idx]
        # walk from hi down to lo in pieces with width * local frequency <= 1;
        # frequency |a-1|/t + 1 grows as t shrinks, so one correction suffices
        while hi > lo:
            # geometric near the origin: never shrink by more than half
            start = max(hi - 1.0 / (am1 / hi + 1.0), 0.5 * hi)
            kap_lo = am1 / start + 1.0
            if (hi - start) * kap_lo > 1.0:
                start = max(hi - 1.0 / kap_lo, 0.5 * hi)
            if start < lo:
                start = lo
                kap_lo = am1 / start + 1.0
            if (hi - start) * kap_lo <= 0.15:
                s0, s1 = _segment(a, delta, start, hi, want_d, _GL4_X, _GL4_W)
            else:
                s0, s1 = _segment(a, delta, start, hi, want_d, _GL8_X, _GL8_W)
            acc0 += s0
            acc1 += s1
            hi = start
        g[idx] = acc0
        dg[idx] = acc1
    return g, dg


# ------------------------------------------------------------------ ideal table


@njit(cache=True)
def build_ideal_table(max_norm, split_p, split_a, split_b):
    """Ideals of Z[w] with norm <= max_norm, each as sector generator a > b >= 0.

    Returns (A, B, N, P, Q) sorted by (N, A, B): P[i] is the index of a prime
    ideal dividing ideal i and Q[i] the index of the cofactor (P[i] = i and
    Q[i] = 0 for prime ideals; ideal 0 is the unit ideal).  split_* list one
    generator per split rational prime.
    """
    amax = int(math.sqrt(4.0 * max_norm / 3.0)) + 2
    cnt = 0
    for a in range(1, amax + 1):
        for b in range(0, a):
            if a * a - a * b + b * b <= max_norm:
                cnt += 1
    A = np.empty(cnt, dtype=np.int64)
    B = np.empty(cnt, dtype=np.int64)
    N = np.empty(cnt, dtype=np.int64)
    i = 0
    for a in range(1, amax + 1):
        for b in range(0, a):
            n = a * a - a * b + b * b
            if n <= max_norm:
                A[i] = a
                B[i] = b
                N[i] = n
                i += 1
    key = N * (4 * amax * amax) + A * (2 * amax) + B
    order = np.argsort(key)
    A = A[order]
    B = B[order]
    N = N[order]
    index = -np.ones((amax + 1) * (amax + 1), dtype=np.int64)
    for i in range(cnt):
        index[A[i] * (amax + 1) + B[i]] = i
    # smallest prime factor of norms
    spf = np.zeros(max_norm + 1, dtype=np.int64)
    for k in range(2, max_norm + 1):
        if spf[k] == 0:
            for m in range(k, max_norm + 1, k):
                if spf[m] == 0:
                    spf[m] = k
    gen_a = np.zeros(max_norm + 1, dtype=np.int64)
    gen_b = np.zeros(max_norm + 1, dtype=np.int64)
    for t in range(split_p.size):
        if split_p[t] <= max_norm:
            gen_a[split_p[t]] = split_a[t]
            gen_b[split_p[t]] = split_b[t]
    P = np.zeros(cnt, dtype=np.int64)
    Q = np.zeros(cnt, dtype=np.int64)
    for i in range(1, cnt):
        a = A[i]
        b = B[i]
        p = spf[N[i]]
        if p == 3:
            # divide by 1 - w: z (1 - w^2) / 3 = z (2 + w) / 3
            qa = (2 * a - b) // 3
            qb = (a + b) // 3
            fa, fb = 1, -1
        elif p % 3 == 2:
            qa = a // p
            qb = b // p
            fa, fb = p, 0
        else:
            ca = gen_a[p]
            cb = gen_b[p]
            # try the generator c: z * conj(c) / p ; conj(c) = (ca - cb) - cb w
            da = ca - cb
            db = -cb
            ta = a * da - b * db
            tb = a * db + b * da - b * db
            if ta % p == 0 and tb % p == 0:
                qa = ta // p
                qb = tb // p
                fa, fb = ca, cb
            else:
                # the conjugate divides: z * c / p
                ta = a * ca - b * cb
                tb = a * cb + b * ca - b * cb
                qa = ta // p
                qb = tb // p
                fa, fb = ca - cb, -cb
        Q[i] = _lookup(qa, qb, index, amax)
        P[i] = _lookup(fa, fb, index, amax)
        if Q[i] == 0:
            P[i] = i
    return A, B, N, P, Q


@njit(cache=True)
def _sector(a, b):
    # rotate by 60 degrees (times 1 + w) until a > b >= 0
    for _ in range(6):
        if a > b >= 0:
            return a, b
        # multiply by -w^2 = 1 + w: (a + bw)(1 + w) = (a - b) + a w
        a, b = a - b, a
    return a, b


@njit(cache=True)
def _lookup(a, b, index, amax):
    a, b = _sector(a, b)
    return index[a * (amax + 1) + b]


@njit(cache=True)
def propagate_exponents(P, Q, prime_exp):
    """Completely multiplicative extension: exponent mod 3, -1 meaning zero.

    prime_exp is indexed like P and only read at prime ideals.
    """
    n = P.size
    e = np.zeros(n, dtype=np.int64)
    for i in range(1, n):
        if Q[i] == 0:
            e[i] = prime_exp[i]
        else:
            x = e[P[i]]
            y = e[Q[i]]
            e[i] = -1 if (x < 0 or y < 0) else (x + y) % 3
    return e


@njit(cache=True)
def prime_ideal_exponents(A, B, N, P, Q, pa, pb, p, r):
    """chi_pi at each prime ideal of the table, pi = pa + pb w split of norm p.

    r = w mod pi.  Each prime ideal generator x + y w maps to x + y r mod p.
    Returns exponent (0,1,2) or -1 when pi divides the ideal.
    """
    n = A.size
    out = np.zeros(n, dtype=np.int64)
    e3 = (p - 1) // 3
    r2 = (r * r) % p
    for i in range(1, n):
        if Q[i] != 0:
            continue
        v = (A[i] % p + (B[i] % p) * r) % p
        if v == 0:
            out[i] = -1
            continue
        t = _powmod(v, e3, p)
        if t == 1:
            out[i] = 0
        elif t == r:
            out[i] = 1
        elif t == r2:
            out[i] = 2
        else:
            out[i] = -2  # signals a bad modulus
    return out


@njit(cache=True)
def _powmod(x, k, m):
    out = 1
    x %= m
    while k > 0:
        if k & 1:
            out = (out * x) % m
        x = (x * x) % m
        k >>= 1
    return out


@njit(cache=True)
def rational_exponents(nmax, p, r):
    """Exponent of the cubic character n -> (n/pi)_3 for n = 0..nmax (-1 if p | n)."""
    out = np.empty(nmax + 1, dtype=np.int64)
    e3 = (p - 1) // 3
    r2 = (r * r) % p
    for n in range(nmax + 1):
        v = n % p
        if v == 0:
            out[n] = -1
            continue
        t = _powmod(v, e3, p)
        out[n] = 0 if t == 1 else (1 if t == r else (2 if t == r2 else -2))
    return out


@njit(cache=True)
def _fq2_pow(x, y, k, q):
    ox, oy = 1, 0
    while k > 0:
        if k & 1:
            ox, oy = (ox * x - oy * y) % q, (ox * y + oy * x - oy * y) % q
        x, y = (x * x - y * y) % q, (2 * x * y - y * y) % q
        k >>= 1
    return ox, oy


@njit(cache=True)
def prime_ideal_exponents_inert(A, B, Q, q):
    """chi_{-q} at each prime ideal: Euler criterion in F_q[w]."""
    n = A.size
    out = np.zeros(n, dtype=np.int64)
    e3 = (q * q - 1) // 3
    for i in range(1, n):
        if Q[i] != 0:
            continue
        x = A[i] % q
        y = B[i] % q
        if x == 0 and y == 0:
            out[i] = -1
            continue
        tx, ty = _fq2_pow(x, y, e3, q)
        if tx == 1 and ty == 0:
            out[i] = 0
        elif tx == 0 and ty == 1:
            out[i] = 1
        elif tx == q - 1 and ty == q - 1:
            out[i] = 2
        else:
            out[i] = -2
    return out


@njit(cache=True)
def prime_power_base(P, Q):
    """Index of the prime ideal p when ideal i = p^k, else -1 (and -1 for the unit ideal)."""
    n = P.size
    base = -np.ones(n, dtype=np.int64)
    for i in range(1, n):
        if Q[i] == 0:
            base[i] = i
        else:
            bq = base[Q[i]]
            if bq == P[i]:
                base[i] = bq
    return base
