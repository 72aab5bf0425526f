"""Prime elements of Z[w]: splitting of rational primes, the mod-9 family sieve, Lambda_K."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import cache
from .eisenstein import (
    EisensteinInt,
    LAMBDA,
    ResourceLimit,
    divides,
    is_primary,
    norm,
    primary_associate,
    reduce_mod,
)

SIEVE_CAP = 5 * 10**7
NINE = EisensteinInt(9, 0)


@dataclass(frozen=True)
class PrimaryPrime:
    pi: EisensteinInt
    norm: int
    splitting: str  # 'split' | 'inert' | 'ramified'
    residue_mod9: EisensteinInt

    @classmethod
    def of(cls, pi: EisensteinInt) -> "PrimaryPrime":
        n = norm(pi)
        if n == 3:
            kind = "ramified"
        elif pi.b == 0 or math.isqrt(n) ** 2 == n:
            kind = "inert"
        else:
            kind = "split"
        return cls(pi, n, kind, reduce_mod(pi, NINE))

    @property
    def conjugate(self) -> "PrimaryPrime":
        return PrimaryPrime.of(self.pi.conj())


def rational_primes(limit: int) -> np.ndarray:
    """All primes <= limit (Eratosthenes on odd numbers)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit // 2 + 1, dtype=bool)  # index i <-> 2i+1
    sieve[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if sieve[i]:
            p = 2 * i + 1
            sieve[p * p // 2 :: p] = False
    odd = 2 * np.nonzero(sieve)[0] + 1
    odd = odd[odd <= limit]
    return np.concatenate(([2], odd)).astype(np.int64)


def is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime_element(z: EisensteinInt) -> bool:
    n = norm(z)
    if n <= 1:
        return False
    if is_rational_prime(n):
        return True
    q = math.isqrt(n)
    if q * q != n or q % 3 != 2 or not is_rational_prime(q):
        return False
    # unit multiple of q iff q divides both coordinates
    return z.a % q == 0 and z.b % q == 0


def cube_root_of_unity_mod(p: int) -> int:
    """A root of r^2 + r + 1 = 0 mod p, for p = 1 mod 3."""
    g = 2
    while True:
        r = pow(g, (p - 1) // 3, p)
        if r != 1:
            return r
        g += 1


def _cornacchia4(p: int) -> tuple[int, int]:
    """(x, y) with x^2 + 3 y^2 = 4p."""
    x0 = (2 * cube_root_of_unity_mod(p) + 1) % p  # sqrt(-3) mod p
    if x0 % 2 == 0:
        x0 = p - x0
    a, b = 2 * p, x0
    bound = math.isqrt(4 * p)
    while b > bound:
        a, b = b, a % b
    c, r = divmod(4 * p - b * b, 3)
    y = math.isqrt(c)
    if r or y * y != c:
        raise ArithmeticError(f"norm-form solve failed for p={p}")
    return b, y


def split_rational_prime(p: int) -> PrimaryPrime:
    """Primary pi with N(pi) = p; of the conjugate pair the one with b > 0."""
    if p % 3 != 1 or not is_rational_prime(p):
        raise ValueError(f"{p} is not a rational prime = 1 mod 3")
    x, y = _cornacchia4(p)
    pi = primary_associate(EisensteinInt((x + y) // 2, y))
    if pi.b < 0:
        pi = pi.conj()
    return PrimaryPrime(pi, p, "split", reduce_mod(pi, NINE))


def _split_all(ps: np.ndarray) -> list[tuple[int, int, int]]:
    out = []
    for p in ps.tolist():
        x, y = _cornacchia4(p)
        z = primary_associate(EisensteinInt((x + y) // 2, y))
        if z.b < 0:
            z = z.conj()
        out.append((z.a, z.b, p))
    return out


def primary_prime_table(limit: float, workers: int = 1) -> np.ndarray:
    """Every primary prime (both conjugates for split p) with norm <= limit.

    Returns an int64 array of rows (a, b, norm, kind) with kind 1 = split,
    2 = inert, sorted by (norm, a, b).  The ramified prime is excluded.
    """
    limit = int(limit)
    if limit > SIEVE_CAP:
        raise ResourceLimit(f"sieve limit {limit} exceeds cap {SIEVE_CAP}")
    ps = rational_primes(limit)
    split = ps[ps % 3 == 1]
    inert = ps[(ps % 3 == 2) & (ps * ps <= limit)]
    if workers > 1 and split.size > 10_000:
        from concurrent.futures import ProcessPoolExecutor

        chunks = np.array_split(split, workers)
        with ProcessPoolExecutor(workers) as ex:
            pieces = list(ex.map(_split_all, chunks))
        pairs = [t for piece in pieces for t in piece]
    else:
        pairs = _split_all(split)
    rows = []
    for a, b, p in pairs:
        rows.append((a, b, p, 1))
        rows.append((a - b, -b, p, 1))  # the conjugate, also primary
    for q in inert.tolist():
        rows.append((-q, 0, q * q, 2))
    arr = np.array(rows, dtype=np.int64).reshape(-1, 4)
    order = np.lexsort((arr[:, 1], arr[:, 0], arr[:, 2]))
    return arr[order]


_KIND = {1: "split", 2: "inert"}


def _family_rows(limit: int, split_only: bool) -> np.ndarray:
    key = cache.cache_key("sieve", limit=limit)
    text = cache.read(key)
    if text is None:
        t = primary_prime_table(limit)
        fam = t[((t[:, 0] - 1) % 9 == 0) & (t[:, 1] % 9 == 0)]
        text = family_to_csv(fam)
        cache.write(key, text)
    fam = family_from_csv(text)
    if split_only:
        fam = fam[fam[:, 3] == 1]
    return fam


def family_to_csv(rows: np.ndarray) -> str:
    lines = ["a,b,norm,splitting"]
    lines += [f"{a},{b},{n},{_KIND[k]}" for a, b, n, k in rows.tolist()]
    return "\n".join(lines) + "\n"


def family_from_csv(text: str) -> np.ndarray:
    inv = {v: k for k, v in _KIND.items()}
    rows = []
    for line in text.strip().splitlines()[1:]:
        a, b, n, kind = line.split(",")
        rows.append((int(a), int(b), int(n), inv[kind]))
    return np.array(rows, dtype=np.int64).reshape(-1, 4)


def family_array(X: float, split_only: bool = False) -> np.ndarray:
    """Family rows (a, b, norm, kind) with norm <= X, cached by the sieve limit."""
    if X < 2:
        return np.zeros((0, 4), dtype=np.int64)
    limit = int(X)
    if limit > SIEVE_CAP:
        raise ResourceLimit(f"sieve limit {limit} exceeds cap {SIEVE_CAP}")
    return _family_rows(limit, split_only)


def sieve_family(X: float, split_only: bool = False) -> list[PrimaryPrime]:
    """Prime elements = 1 mod 9 with norm <= X, sorted by (norm, a, b)."""
    return [
        PrimaryPrime(EisensteinInt(a, b), n, _KIND[k], EisensteinInt(1, 0))
        for a, b, n, k in family_array(X, split_only).tolist()
    ]


def chebyshev_family(y: float, split_only: bool = False) -> float:
    rows = family_array(y, split_only)
    # Lambda_K of a prime is log of its norm
    return math.fsum(math.log(n) for n in rows[:, 2].tolist())


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=4096)
def _split_prime_elt(p: int) -> EisensteinInt:
    return split_rational_prime(p).pi


def lambda_K(n: EisensteinInt) -> float:
    N = norm(n)
    if N == 0:
        raise ValueError("Lambda_K(0) undefined")
    if N == 1:
        return 0.0
    f = _factor_int(N)
    if len(f) != 1:
        return 0.0
    (p, k), = f.items()
    if p == 3:
        return math.log(3)
    if p % 3 == 2:
        # N = q^(2j) and n must be a unit times q^j
        j = k // 2
        return 2 * math.log(p) if n.a % p**j == 0 and n.b % p**j == 0 else 0.0
    pi = _split_prime_elt(p)
    if divides(pi**k, n) or divides(pi.conj() ** k, n):
        return math.log(p)
    return 0.0


def ramified_prime() -> PrimaryPrime:
    return PrimaryPrime(LAMBDA, 3, "ramified", reduce_mod(LAMBDA, NINE))


__all__ = [
    "PrimaryPrime",
    "chebyshev_family",
    "family_array",
    "is_prime_element",
    "is_primary",
    "lambda_K",
    "primary_prime_table",
    "rational_primes",
    "sieve_family",
    "split_rational_prime",
]
