from math import gcd

import pytest
from hypothesis import given, strategies as st

from pi3mod.gamma import (
    GammaElement, bracket_expand, delta_B_coordinates, delta_B_generators, gamma_expand,
    gamma_of_cyclic, gamma_order_from_invariants, gamma_pi2, gamma_rank, tau_embed, tau_preimage,
)
from pi3mod.pi3 import compute_pi2, special_x
from pi3mod.ring import GroupRingElement, TensorElement, augmentation_basis, tensor
from pi3mod.zmod import FgAbelianGroup


def test_gamma_expand_examples():
    assert gamma_expand([1]) == GammaElement(2, (1,))
    assert gamma_expand([2]) == GammaElement(2, (4,))
    assert gamma_expand([1, 1]) == GammaElement(3, (1, 1, 1))


def test_bracket_examples():
    assert bracket_expand([1, 0], [0, 1]) == GammaElement(3, (0, 0, 1))
    assert bracket_expand([1], [1]) == GammaElement(2, (2,))
    assert bracket_expand([2, 0], [0, 1]) == GammaElement(3, (0, 0, 2))
    with pytest.raises(ValueError):
        bracket_expand([1, 0], [1])


def test_tau_examples():
    k1 = augmentation_basis(2)[0]
    assert tau_embed(GammaElement(2, (1,))) == tensor(k1, k1)
    assert tau_embed(GammaElement.zero(3)).is_zero()
    a, b = augmentation_basis(3)
    assert tau_embed(GammaElement(3, (0, 0, 1))) == tensor(a, b) + tensor(b, a)


def test_tau_preimage_examples():
    a, b = augmentation_basis(3)
    assert tau_preimage(tensor(a, b)) is None
    assert tau_preimage(2 * tensor(a, a)) == GammaElement(3, (2, 0, 0))
    assert tau_preimage(TensorElement.from_rows([[1, 0], [0, 0]])) is None


def test_delta_B_examples():
    assert all(t.is_zero() for t in delta_B_generators(2, GroupRingElement.zero(2)))
    gens = {g.coords for g in delta_B_coordinates(2, special_x(2, 2))}
    assert gens == {(4,), (-4,), (-8,)}
    assert gamma_pi2(2, special_x(2, 1)).group.is_trivial()
    with pytest.raises(ValueError):
        delta_B_generators(2, GroupRingElement.from_coeffs([1, 1]))


def test_gamma_pi2_examples():
    assert gamma_pi2(2, special_x(2, 2)).group == FgAbelianGroup((4,))
    assert gamma_pi2(2, special_x(2, 3)).group == FgAbelianGroup((3,))
    g = gamma_pi2(3, special_x(3, 2)).group
    assert g == FgAbelianGroup.from_cyclic_orders([4, 2, 4]) and g.order() == 32


def test_gamma_of_cyclic():
    assert gamma_of_cyclic(2) == FgAbelianGroup((4,))
    assert gamma_of_cyclic(3) == FgAbelianGroup((3,))
    assert gamma_of_cyclic(0) == FgAbelianGroup((), 1)
    assert gamma_of_cyclic(1).is_trivial()


kvec = st.integers(2, 6).flatmap(lambda f: st.lists(st.integers(-9, 9), min_size=f - 1, max_size=f - 1))


@given(kvec, st.integers(-5, 5))
def test_quadratic_homogeneity(v, n):
    assert gamma_expand([n * c for c in v]) == n * n * gamma_expand(v)


@given(st.integers(2, 6).flatmap(lambda f: st.tuples(
    st.lists(st.integers(-9, 9), min_size=f - 1, max_size=f - 1),
    st.lists(st.integers(-9, 9), min_size=f - 1, max_size=f - 1))))
def test_cross_effect_is_bracket(uv):
    u, v = uv
    s = [a + b for a, b in zip(u, v)]
    assert gamma_expand(s) - gamma_expand(u) - gamma_expand(v) == bracket_expand(u, v)
    assert bracket_expand(u, v) == bracket_expand(v, u)


@given(st.integers(2, 6).flatmap(lambda f: st.lists(st.integers(-9, 9), min_size=gamma_rank(f),
                                                    max_size=gamma_rank(f)).map(lambda c: GammaElement(f, tuple(c)))))
def test_tau_round_trip(g):
    assert tau_preimage(tau_embed(g)) == g


def test_order_matches_product_formula():
    for f in range(2, 7):
        for xt in range(1, 5):
            x = special_x(f, xt)
            orders = list(compute_pi2(f, x).group.torsion)
            assert gamma_pi2(f, x).group.order() == gamma_order_from_invariants(orders)
    for coeffs in ([-2, 1, 1], [1, -2, 0, 1], [-3, 1, 1, 1], [2, -1, -1, 0, 0]):
        x = GroupRingElement.from_coeffs(coeffs)
        pi2 = compute_pi2(len(coeffs), x).group
        if pi2.is_finite():
            assert gamma_pi2(len(coeffs), x).group.order() == gamma_order_from_invariants(pi2.torsion)


def test_action_has_order_f():
    for f in range(2, 7):
        for coeffs in ([2] + [0] * (f - 2) + [-2], [-3, 3] + [0] * (f - 2)):
            G = gamma_pi2(f, GroupRingElement.from_coeffs(coeffs))
            assert G.action.power(f).is_identity()
            if f == 2:
                assert G.action.is_identity()


def test_cyclic_closed_form_agrees():
    for xt in range(1, 9):
        assert gamma_pi2(2, special_x(2, xt)).group == gamma_of_cyclic(xt)
        assert gamma_pi2(2, special_x(2, xt)).group.order() == xt * gcd(xt, 2)
