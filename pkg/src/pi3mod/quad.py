"""Pair model of the quadratic-module layer L over the 3-cell attached along x.

An element is (y, l): the section value t_x(y) plus the central part
omega(l) with l in (R (x) R) / Delta_B.  The boundary delta lands in the
nil(2)-module M of ``nil2``, and u_x(y) = t_x(y) - omega(mu(x, y)) is the
splitting over H_3 = ker(d_x).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _signs
from .gamma import GammaPi2, delta_B_coordinates, gamma_pi2, tau_embed
from .nil2 import MElement, fiber_space, m_add, m_element, m_sum_action, mu
from .ring import GroupRingElement, TensorElement, act, basis_element, gr_mul, tensor, tensor_act
from .zmod import Quotient


def psi(z: GroupRingElement, y: GroupRingElement, x: GroupRingElement) -> TensorElement:
    """sum_{m > n} z_m y_n x[n] (x) x[m]."""
    z._same(y)
    z._same(x)
    f = x.f
    shifts = [act(x, i) for i in range(f)]
    acc = [[0] * f for _ in range(f)]
    for m in range(1, f):
        if not z.coeffs[m]:
            continue
        for n in range(m):
            c = z.coeffs[m] * y.coeffs[n]
            if c:
                a, b = shifts[n].coeffs, shifts[m].coeffs
                for i in range(f):
                    if a[i]:
                        row = acc[i]
                        for j in range(f):
                            row[j] += c * a[i] * b[j]
    t = TensorElement.from_rows(acc)
    return t if _signs.SIGN["psi"] == 1 else -t


def psi_bar_1(y: GroupRingElement, x: GroupRingElement) -> TensorElement:
    """Correction term of the generator action on t_x(y)."""
    y._same(x)
    f = x.f
    top = y.coeffs[f - 1]
    if not top:
        return TensorElement.zero(f)
    e0 = basis_element(f, 0)
    acc = top * (tensor(x, e0) + tensor(e0, x))
    for p in range(f - 1):
        c = y.coeffs[p] * top
        if c:
            acc = acc + c * tensor(act(x, p + 1), x)
    return acc if _signs.SIGN["psi_bar_1"] == 1 else -acc


class QuadContext:
    """Fiber lattice (R (x) R) / Delta_B for a fixed attaching element x."""

    def __init__(self, x: GroupRingElement):
        self.x = x
        self.f = f = x.f
        self.fiber = Quotient(f * f, [tau_embed(g).flat() for g in delta_B_coordinates(f, x)])
        self.gamma = gamma_pi2(f, x)

    def reduce(self, t: TensorElement) -> tuple[int, ...]:
        return self.fiber.reduce(t.flat())

    def lift(self, fib) -> TensorElement:
        return TensorElement.from_flat(self.f, self.fiber.lift(fib))

    def to_gamma(self, fib) -> tuple[int, ...]:
        """Gamma(pi_2) coordinates of a fiber class lying in Gamma(K) / Delta_B."""
        return self.gamma.reduce_tensor(self.lift(fib))

    def from_gamma(self, coords) -> tuple[int, ...]:
        return self.reduce(tau_embed(self.gamma.lift(coords)))


@lru_cache(maxsize=256)
def _context(f: int, coeffs: tuple[int, ...]) -> QuadContext:
    return QuadContext(GroupRingElement(f, coeffs))


def quad_context(x: GroupRingElement) -> QuadContext:
    if x.augmentation() != 0:
        raise ValueError(f"x = ({x}) is not in the augmentation ideal")
    return _context(x.f, x.coeffs)


@dataclass(frozen=True, slots=True)
class LElement:
    x: GroupRingElement
    base: GroupRingElement
    fiber: tuple[int, ...]

    @property
    def f(self) -> int:
        return self.x.f


def l_element(x: GroupRingElement, y: GroupRingElement, t: TensorElement | None = None) -> LElement:
    """t_x(y) + omega(t)."""
    ctx = quad_context(x)
    y._same(x)
    return LElement(x, y, ctx.reduce(t if t is not None else TensorElement.zero(x.f)))


def t_x(x: GroupRingElement, y: GroupRingElement) -> LElement:
    return l_element(x, y)


def omega(x: GroupRingElement, t: TensorElement) -> LElement:
    return l_element(x, GroupRingElement.zero(x.f), t)


def l_zero(x: GroupRingElement) -> LElement:
    return l_element(x, GroupRingElement.zero(x.f))


def _same_context(a: LElement, b: LElement) -> None:
    if a.x != b.x:
        raise ValueError("elements belong to different attaching maps")


def l_add(a: LElement, b: LElement) -> LElement:
    """t_x(z) + t_x(y) = t_x(z + y) - omega(psi(z, y)); omega is central."""
    _same_context(a, b)
    ctx = quad_context(a.x)
    corr = ctx.reduce(psi(a.base, b.base, a.x))
    fib = ctx.fiber.group.canonical([p + q - c for p, q, c in zip(a.fiber, b.fiber, corr)])
    return LElement(a.x, a.base + b.base, fib)


def l_neg(a: LElement) -> LElement:
    ctx = quad_context(a.x)
    corr = ctx.reduce(psi(a.base, a.base, a.x))
    return LElement(a.x, -a.base, ctx.fiber.group.canonical([-p - c for p, c in zip(a.fiber, corr)]))


def l_sub(a: LElement, b: LElement) -> LElement:
    return l_add(a, l_neg(b))


def _act_once(a: LElement) -> LElement:
    ctx = quad_context(a.x)
    t = tensor_act(ctx.lift(a.fiber), 1) + psi_bar_1(a.base, a.x)
    return LElement(a.x, act(a.base, 1), ctx.reduce(t))


def _act_back(a: LElement) -> LElement:
    ctx = quad_context(a.x)
    y = act(a.base, -1)
    t = tensor_act(ctx.lift(a.fiber) - psi_bar_1(y, a.x), -1)
    return LElement(a.x, y, ctx.reduce(t))


def l_act(a: LElement, k: int) -> LElement:
    """Action of k in the infinite cyclic group acting on L (iterated generator action)."""
    step = _act_once if k >= 0 else _act_back
    for _ in range(abs(k)):
        a = step(a)
    return a


def delta(a: LElement) -> MElement:
    """delta(t_x(y) + omega(l)) = sum_i y_i s(x)^i + w(l)."""
    ctx = quad_context(a.x)
    fib = m_element(GroupRingElement.zero(a.f), ctx.lift(a.fiber))
    return m_add(m_sum_action(a.x, a.base), fib)


def in_kernel(x: GroupRingElement, y: GroupRingElement) -> bool:
    return gr_mul(x, y).is_zero()


def u_x(x: GroupRingElement, y: GroupRingElement) -> LElement:
    """The splitting t_x(y) - omega(mu(x, y)) for y in ker(d_x)."""
    if not in_kernel(x, y):
        raise ValueError(f"y = ({y}) is not in the kernel of multiplication by x")
    return l_element(x, y, -mu(x, y))
