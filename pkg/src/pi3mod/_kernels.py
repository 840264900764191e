"""Exhaustive search for t with b + beta(t) = 0 over a finite product of cyclic groups.

Two interchangeable implementations: a numba kernel that walks the
mixed-radix counter and updates the residual by one column per touched
digit, and a chunked numpy version.  Set PI3MOD_NUMBA=0 to force numpy.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("PI3MOD_NUMBA", "1") != "0"


if HAVE_NUMBA:

    @njit(cache=True)
    def _walk(beta, b, moduli):
        m = moduli.shape[0]
        t = np.zeros(m, dtype=np.int64)
        res = np.empty(m, dtype=np.int64)
        for i in range(m):
            res[i] = b[i] % moduli[i]
        while True:
            hit = True
            for i in range(m):
                if res[i] != 0:
                    hit = False
                    break
            if hit:
                return True, t
            j = 0
            while j < m:
                for i in range(m):
                    res[i] = (res[i] + beta[i, j]) % moduli[i]
                t[j] += 1
                if t[j] < moduli[j]:
                    break
                t[j] = 0
                j += 1
            if j == m:
                return False, t


def _search_numpy(beta, b, moduli, chunk=1 << 16):
    m = moduli.shape[0]
    strides = np.ones(m, dtype=np.int64)
    for j in range(1, m):
        strides[j] = strides[j - 1] * moduli[j - 1]
    total = int(np.prod(moduli, dtype=object)) if m else 1
    bt = beta.T.copy()
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = (idx[:, None] // strides[None, :]) % moduli[None, :]
        res = (digits @ bt + b[None, :]) % moduli[None, :]
        hits = np.flatnonzero(~res.any(axis=1))
        if hits.size:
            return True, digits[hits[0]]
    return False, np.zeros(m, dtype=np.int64)


def search_split(beta, b, moduli, use_numba: bool | None = None):
    """Search t in prod Z/moduli with b + beta t = 0 componentwise mod moduli.

    beta must send each coordinate of order d to an element killed by d.
    Returns (found, t).
    """
    beta = np.asarray(beta, dtype=np.int64).reshape(len(moduli), len(moduli))
    b = np.asarray(b, dtype=np.int64)
    moduli = np.asarray(moduli, dtype=np.int64)
    if np.any(moduli < 1):
        raise ValueError("enumeration needs positive moduli")
    beta = beta % moduli[:, None]
    if use_numba is None:
        use_numba = numba_enabled()
    if len(moduli) == 0:
        return True, np.zeros(0, dtype=np.int64)
    if use_numba and HAVE_NUMBA:
        found, t = _walk(beta, b, moduli)
        return bool(found), t
    return _search_numpy(beta, b, moduli)
