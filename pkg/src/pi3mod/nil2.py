"""Pair model of the totally free nil(2)-module M on one 2-generator.

An element is (a, m): the section value s(a) for a in R plus the central
part w(m) with m in (R (x) R) / Gamma(K).  Addition and the pi_1-action
carry the correction tensors nabla and nabla_bar_k; mu collects the
fiber of sum_i y_i s(x)^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _signs
from .gamma import GammaElement, gamma_rank, tau_embed
from .ring import GroupRingElement, TensorElement, act, tensor_act
from .zmod import Quotient


def _check(*elts: GroupRingElement) -> int:
    f = elts[0].f
    for e in elts[1:]:
        e._same(elts[0])
    return f


def _binom2(r: int) -> int:
    return r * (r - 1) // 2


def nabla(x: GroupRingElement, y: GroupRingElement) -> TensorElement:
    """sum_{m > n} x_m y_n ([n] (x) [m] - [m] (x) [m])."""
    f = _check(x, y)
    rows = [[0] * f for _ in range(f)]
    for m in range(1, f):
        xm = x.coeffs[m]
        if not xm:
            continue
        for n in range(m):
            c = xm * y.coeffs[n]
            if c:
                rows[n][m] += c
                rows[m][m] -= c
    t = TensorElement.from_rows(rows)
    return t if _signs.SIGN["nabla"] == 1 else -t


def _check_k(k: int, f: int) -> None:
    if not 0 <= k < f:
        raise ValueError(f"k must satisfy 0 <= k < {f}, got {k}")


def q_k(k: int, x: GroupRingElement) -> TensorElement:
    """sum_{p < f-k, q < k} x_p x_{q+f-k} ([p+k] (x) [q] - [q] (x) [q])."""
    f = x.f
    _check_k(k, f)
    rows = [[0] * f for _ in range(f)]
    c = x.coeffs
    for p in range(f - k):
        if not c[p]:
            continue
        for q in range(k):
            v = c[p] * c[q + f - k]
            if v:
                rows[p + k][q] += v
                rows[q][q] -= v
    t = TensorElement.from_rows(rows)
    return t if _signs.SIGN["q_k"] == 1 else -t


def l_k(k: int, x: GroupRingElement) -> TensorElement:
    """sum_{q < k} x_{q+f-k} [q] (x) [q]."""
    f = x.f
    _check_k(k, f)
    rows = [[0] * f for _ in range(f)]
    for q in range(k):
        rows[q][q] = x.coeffs[q + f - k]
    t = TensorElement.from_rows(rows)
    return t if _signs.SIGN["l_k"] == 1 else -t


def nabla_bar(k: int, x: GroupRingElement) -> TensorElement:
    return q_k(k, x) + l_k(k, x)


def diagonal(x: GroupRingElement) -> TensorElement:
    """sum_n x_n [n] (x) [n]."""
    f = x.f
    return TensorElement.from_rows([[x.coeffs[i] if i == j else 0 for j in range(f)] for i in range(f)])


def mu(x: GroupRingElement, y: GroupRingElement) -> TensorElement:
    """Fiber of sum_i y_i s(x)^i, computed in closed form and not reduced."""
    f = _check(x, y)
    yc = y.coeffs
    shifts = [act(x, i) for i in range(f)]
    nxx = nabla(x, x)
    acc = TensorElement.zero(f)
    for i in range(f):
        for j in range(i + 1, f):
            c = yc[i] * yc[j]
            if c:
                acc = acc - c * nabla(shifts[i], shifts[j])
    if _signs.SIGN["mu"] != 1:
        acc = -acc
    for i in range(f):
        if yc[i]:
            acc = acc + nabla_bar(i, yc[i] * x) - _binom2(yc[i]) * tensor_act(nxx, i)
    return acc


def mu_cross(x: GroupRingElement, y: GroupRingElement, z: GroupRingElement) -> TensorElement:
    """mu(x, y + z) - mu(x, y) - mu(x, z), bilinear and symmetric in (y, z)."""
    f = _check(x, y, z)
    yc, zc = y.coeffs, z.coeffs
    shifts = [act(x, i) for i in range(f)]
    nxx = nabla(x, x)
    acc = TensorElement.zero(f)
    for i in range(f):
        for j in range(i + 1, f):
            c = yc[i] * zc[j] + zc[i] * yc[j]
            if c:
                acc = acc - c * nabla(shifts[i], shifts[j])
    if _signs.SIGN["mu"] != 1:
        acc = -acc
    for i in range(f):
        c = yc[i] * zc[i]
        if c:
            if i:
                acc = acc + 2 * c * q_k(i, x)
            acc = acc - c * tensor_act(nxx, i)
    return acc


# -- the model ---------------------------------------------------------------


@lru_cache(maxsize=None)
def fiber_space(f: int) -> Quotient:
    """(R (x) R) / Gamma(K) on the f^2 lattice (row-major tensor entries)."""
    n = gamma_rank(f)
    gens = [tau_embed(GammaElement(f, tuple(int(r == c) for r in range(n)))).flat() for c in range(n)]
    return Quotient(f * f, gens)


def fiber_class(t: TensorElement) -> tuple[int, ...]:
    return fiber_space(t.f).reduce(t.flat())


@dataclass(frozen=True, slots=True)
class MElement:
    base: GroupRingElement
    fiber: tuple[int, ...]

    @property
    def f(self) -> int:
        return self.base.f


def m_element(base: GroupRingElement, tensor: TensorElement | None = None) -> MElement:
    """s(base) + w(tensor)."""
    t = tensor if tensor is not None else TensorElement.zero(base.f)
    return MElement(base, fiber_class(t))


def s(x: GroupRingElement) -> MElement:
    return m_element(x)


def m_zero(f: int) -> MElement:
    return m_element(GroupRingElement.zero(f))


def _fiber_tensor(m: MElement) -> TensorElement:
    return TensorElement.from_flat(m.f, fiber_space(m.f).lift(m.fiber))


def _with_fiber(base: GroupRingElement, t: TensorElement) -> MElement:
    return MElement(base, fiber_class(t))


def m_add(m1: MElement, m2: MElement) -> MElement:
    """s(a) + s(b) = s(a + b) - w(nabla(a, b)); the w-part is central."""
    m1.base._same(m2.base)
    space = fiber_space(m1.f)
    fib = [a + b for a, b in zip(m1.fiber, m2.fiber)]
    corr = space.reduce(nabla(m1.base, m2.base).flat())
    return MElement(m1.base + m2.base, space.group.canonical([a - c for a, c in zip(fib, corr)]))


def m_neg(m: MElement) -> MElement:
    space = fiber_space(m.f)
    corr = space.reduce(nabla(m.base, m.base).flat())
    return MElement(-m.base, space.group.canonical([-a - c for a, c in zip(m.fiber, corr)]))


def m_sub(m1: MElement, m2: MElement) -> MElement:
    return m_add(m1, m_neg(m2))


def m_scale(m: MElement, n: int) -> MElement:
    """n-fold sum of m (the negative of |n|-fold sum for n < 0)."""
    if n < 0:
        return m_scale(m_neg(m), -n)
    out, p = m_zero(m.f), m
    while n:
        if n & 1:
            out = m_add(out, p)
        n >>= 1
        if n:
            p = m_add(p, p)
    return out


def m_act(m: MElement, k: int) -> MElement:
    """Right action of the generator power k.

    For 0 <= k < f the section picks up nabla_bar_k; a full turn adds the
    diagonal tensor of the base.
    """
    f = m.f
    q, r = divmod(k, f)
    base = act(m.base, r)
    t = tensor_act(_fiber_tensor(m), r) + nabla_bar(r, m.base)
    if q:
        t = t + q * diagonal(base)
    return _with_fiber(base, t)


def m_sum_action(x: GroupRingElement, y: GroupRingElement) -> MElement:
    """sum_i y_i s(x)^i evaluated step by step in the group."""
    f = _check(x, y)
    sx = s(x)
    out = m_zero(f)
    for i in range(f):
        if y.coeffs[i]:
            out = m_add(out, m_scale(m_act(sx, i), y.coeffs[i]))
    return out


def boundary(m: MElement) -> int:
    """The crossed-module boundary into Z: f times the augmentation of the base."""
    return m.f * m.base.augmentation()
