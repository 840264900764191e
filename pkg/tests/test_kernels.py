import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pi3mod._kernels import HAVE_NUMBA, _search_numpy, numba_enabled, search_split

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")


@st.composite
def systems(draw):
    m = draw(st.integers(1, 4))
    mods = draw(st.lists(st.sampled_from([2, 3, 4, 6]), min_size=m, max_size=m))
    # column j must be killed by mods[j]: take multiples of mods[i] / gcd(mods[i], mods[j])
    beta = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            step = mods[i] // np.gcd(mods[i], mods[j])
            beta[i, j] = step * draw(st.integers(0, 5))
    b = np.array(draw(st.lists(st.integers(-9, 9), min_size=m, max_size=m)), dtype=np.int64)
    return beta, b, np.array(mods, dtype=np.int64)


def _check(beta, b, mods, t):
    return not np.any((b + beta @ t) % mods)


@settings(max_examples=80)
@given(systems())
def test_numpy_search_finds_valid_solution(sys_):
    beta, b, mods = sys_
    found, t = search_split(beta, b, mods, use_numba=False)
    if found:
        assert _check(beta, b, mods, t)
    brute = any(_check(beta, b, mods, np.array(v)) for v in np.ndindex(*mods))
    assert found == brute


@needs_numba
@settings(max_examples=80)
@given(systems())
def test_numba_matches_numpy(sys_):
    beta, b, mods = sys_
    f1, t1 = search_split(beta, b, mods, use_numba=True)
    f2, _ = search_split(beta, b, mods, use_numba=False)
    assert f1 == f2
    if f1:
        assert _check(beta, b, mods, t1)


def test_env_flag(monkeypatch):
    monkeypatch.setenv("PI3MOD_NUMBA", "0")
    assert not numba_enabled()
    monkeypatch.setenv("PI3MOD_NUMBA", "1")
    assert numba_enabled() == HAVE_NUMBA


def test_chunking_boundary():
    mods = np.array([5, 5, 5], dtype=np.int64)
    beta = np.eye(3, dtype=np.int64)
    b = np.array([1, 2, 3], dtype=np.int64)
    found, t = _search_numpy(beta, b, mods, chunk=7)
    assert found and list(t) == [4, 3, 2]
