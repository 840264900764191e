import pytest
from hypothesis import given, strategies as st

from pi3mod.nil2 import m_act, m_add, m_zero
from pi3mod.quad import (
    delta, in_kernel, l_act, l_add, l_element, l_neg, l_sub, l_zero, omega, psi, psi_bar_1, quad_context,
    t_x, u_x,
)
from pi3mod.ring import GroupRingElement, TensorElement, act, basis_element, gr_mul, tensor
from pi3mod.zmod import kernel_basis

from strategies import augmentation_elements, moduli, ring_elements


def el(*c):
    return GroupRingElement.from_coeffs(c)


def test_psi_examples():
    x = el(-1, 1)
    assert psi(el(1, 0), el(1, 0), x).is_zero()
    assert psi(el(0, 1), el(1, 0), x) == tensor(x, act(x, 1))
    assert psi(el(0, 2), el(3, 0), x) == 6 * tensor(x, act(x, 1))


def test_psi_bar_examples():
    x = el(-1, 1)
    assert psi_bar_1(el(1, 0), x).is_zero()
    e0 = basis_element(2, 0)
    assert psi_bar_1(el(0, 1), x) == tensor(x, e0) + tensor(e0, x)
    assert psi_bar_1(el(1, 1), x) == tensor(x, e0) + tensor(e0, x) + tensor(act(x, 1), x)


def test_context_rejects_non_augmentation():
    with pytest.raises(ValueError):
        quad_context(el(1, 1))


def test_u_x_requires_kernel():
    x = el(-2, 2)
    assert in_kernel(x, el(1, 1))
    assert not in_kernel(x, el(1, 0))
    with pytest.raises(ValueError):
        u_x(x, el(1, 0))


def test_u_x_lies_over_zero():
    for coeffs in ([-2, 2], [-1, 0, 1], [-3, 3, 0, 0], [1, -2, 1]):
        x = GroupRingElement.from_coeffs(coeffs)
        f = x.f
        for v in kernel_basis([list(r) for r in zip(*[act(x, j).coeffs for j in range(f)])], f):
            y = GroupRingElement.from_coeffs(v)
            assert in_kernel(x, y)
            assert delta(u_x(x, y)) == m_zero(f)


def test_full_turn():
    for coeffs in ([-2, 2], [-1, 0, 1], [2, -1, -1]):
        x = GroupRingElement.from_coeffs(coeffs)
        f = x.f
        for y in (basis_element(f, 0), GroupRingElement.from_coeffs([1] + [-1] * (f - 1))):
            xy = gr_mul(x, y)
            e0 = basis_element(f, 0)
            expect = l_add(t_x(x, y), omega(x, tensor(xy, e0) + tensor(e0, xy)))
            assert l_act(t_x(x, y), f) == expect


@st.composite
def lelements(draw, n):
    f = draw(moduli)
    x = draw(augmentation_elements(f))
    out = []
    for _ in range(n):
        y = draw(ring_elements(f))
        t = TensorElement.from_flat(f, draw(st.lists(st.integers(-3, 3), min_size=f * f, max_size=f * f)))
        out.append(l_element(x, y, t))
    return out


@given(lelements(3))
def test_group_axioms(ls):
    a, b, c = ls
    assert l_add(l_add(a, b), c) == l_add(a, l_add(b, c))
    assert l_add(a, l_zero(a.x)) == a
    assert l_add(a, l_neg(a)) == l_zero(a.x)
    assert l_sub(l_add(a, b), b) == a


@given(lelements(2), st.integers(-3, 3))
def test_action_is_automorphism(ls, k):
    a, b = ls
    assert l_act(l_add(a, b), k) == l_add(l_act(a, k), l_act(b, k))
    assert l_act(l_act(a, k), -k) == a


@given(lelements(2))
def test_delta_is_equivariant_homomorphism(ls):
    a, b = ls
    assert delta(l_add(a, b)) == m_add(delta(a), delta(b))
    assert delta(l_act(a, 1)) == m_act(delta(a), 1)
