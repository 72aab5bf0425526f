"""Ratio LHS/main for the K- and Q-side moments over a few X, printed as a table."""

import argparse
import time

from cubic_hecke.moments import first_moment, logderiv_moment, negative_moment, q_side_suite, ratios_sum

RUNS = {
    "first(0)": lambda X: first_moment(X, 0.0),
    "ratios(.2,.2)": lambda X: ratios_sum(X, 0.2, 0.2),
    "ratios(.1,.4)": lambda X: ratios_sum(X, 0.1, 0.4),
    "negative(.5)": lambda X: negative_moment(X, 0.5),
    "logderiv(.3)": lambda X: logderiv_moment(X, 0.3),
    "q_first(0)": lambda X: q_side_suite(X, "q_first", (0.0,)),
    "q_ratios(.1,.4)": lambda X: q_side_suite(X, "q_ratios", (0.1, 0.4)),
}

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--X", type=float, nargs="+", default=[1e4, 1e5])
    ap.add_argument("--only", nargs="*")
    args = ap.parse_args()
    for name, fn in RUNS.items():
        if args.only and name not in args.only:
            continue
        for X in args.X:
            t = time.perf_counter()
            rep = fn(X)
            print(f"{name:18s} X={X:9.0f} ratio={rep.ratio.real:+.5f}{rep.ratio.imag:+.1e}i "
                  f"E={rep.predicted_exponent.E if rep.predicted_exponent else float('nan'):.3f} "
                  f"flags={len(rep.flags)} {time.perf_counter() - t:.1f}s", flush=True)
