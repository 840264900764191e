"""Time the exhaustive split search with the numba kernel and with the numpy fallback."""

import time

import numpy as np

from pi3mod._kernels import HAVE_NUMBA, search_split
from pi3mod.ext import _flat, beta_matrix, enumeration_size, hom_moduli, linearize_splitting
from pi3mod.pi3 import assemble_pi3, special_x

CELLS = [(3, 6), (4, 4), (5, 2), (5, 3), (4, 6), (6, 2)]


def problem(f, xt):
    p = assemble_pi3(f, special_x(f, xt))
    beta = np.asarray(beta_matrix(p.H3, p.gamma), dtype=np.int64)
    b = np.asarray(_flat(linearize_splitting(p)), dtype=np.int64)
    return beta, b, np.asarray(hom_moduli(p), dtype=np.int64), enumeration_size(p)


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    if HAVE_NUMBA:
        beta, b, mods, _ = problem(2, 2)
        search_split(beta, b, mods, use_numba=True)  # compile
    print(f"{'f':>2} {'xt':>3} {'candidates':>11} {'split':>6} {'numpy s':>10} {'numba s':>10}")
    for f, xt in CELLS:
        beta, b, mods, size = problem(f, xt)
        t_np, (found, _) = timed(lambda: search_split(beta, b, mods, use_numba=False))
        t_nb = float("nan")
        if HAVE_NUMBA:
            t_nb, (found_nb, _) = timed(lambda: search_split(beta, b, mods, use_numba=True))
            assert found_nb == found
        print(f"{f:>2} {xt:>3} {size:>11} {str(found):>6} {t_np:>10.4f} {t_nb:>10.4f}")


if __name__ == "__main__":
    main()
