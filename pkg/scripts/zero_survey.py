"""Low-lying zeros of the first family members, with argument-principle counts."""

import argparse

from cubic_hecke.lfunctions import find_zeros, make_handle
from cubic_hecke.primes import sieve_family

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--T", type=float, default=20.0)
    ap.add_argument("--q-side", action="store_true")
    args = ap.parse_args()
    fam = [p for p in sieve_family(10**5) if not args.q_side or p.splitting == "split"][: args.count]
    for p in fam:
        zl = find_zeros(make_handle(p.pi, "Q" if args.q_side else "K"), args.T, strict=False)
        low = min((abs(g) for g in zl.ordinates), default=float("nan"))
        print(f"{str(p.pi):>10s} N={p.norm:6d} zeros={len(zl):3d} contour={zl.verified_count:3d} lowest={low:.6f} {zl.status}")
