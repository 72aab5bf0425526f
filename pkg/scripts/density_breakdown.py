"""Zero-sum density next to its finite explicit-formula form and the two-term asymptotic."""

import argparse

from cubic_hecke.moments import one_level_density

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--X", type=float, nargs="+", default=[1e3, 3e3, 1e4])
    ap.add_argument("--a", type=float, default=0.5)
    ap.add_argument("--q-side", action="store_true")
    args = ap.parse_args()
    for X in args.X:
        r = one_level_density(X, args.a, q_side=args.q_side, strict=False)
        e = r.extras
        t = ", ".join(f"{v:+.4f}" for v in e["finite_terms"])
        print(f"X={X:8.0f} D={r.lhs.real:.4f} finite={e['finite_form']:.4f} [{t}] "
              f"asym={e['asymptotic']:.4f} (lead {e['asymptotic_leading']:.4f}, corr {e['asymptotic_correction']:+.4f}) "
              f"zeros={e['zeros']} T={e['height']:.1f} tail~{e['zero_tail_estimate']:.4f} flags={len(r.flags)}", flush=True)
