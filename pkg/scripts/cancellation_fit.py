"""Growth exponent of |h_partial(r, s; psi, x)| for a few r, s and ray-class characters."""

import numpy as np

from cubic_hecke.eisenstein import ONE, EisensteinInt
from cubic_hecke.gauss import h_terms
from cubic_hecke.symbols import ray_class_group9


def exponent(r, s, psi, lo=1e3, hi=1e6, points=40):
    norms, terms = h_terms(r, s, psi, hi)
    cums = np.abs(np.cumsum(terms))
    xs = np.geomspace(lo, hi, points)
    idx = np.searchsorted(norms, xs, side="right") - 1
    return np.polyfit(np.log(xs), np.log(cums[idx]), 1)[0]


if __name__ == "__main__":
    G = ray_class_group9()
    for r in (ONE, EisensteinInt(2, 3)):
        for s in (0.5, 0.75, 0.5 + 5j):
            for k in (0, 1):
                psi = None if k == 0 else G.characters[1]
                print(f"r={r} s={s} psi={'principal' if psi is None else psi}: exponent {exponent(r, s, psi):.4f}", flush=True)
