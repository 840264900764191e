import random

import pytest
from hypothesis import given, settings

from pi3mod.pi3 import (
    assemble_pi3, closed_form_check, compute_H3, compute_pi2, cross_A, cross_B,
    special_x, validate_input, verify_module_axioms, with_B_table,
)
from pi3mod.ring import GroupRingElement, norm_element
from pi3mod.zmod import FgAbelianGroup

from strategies import augmentation_elements, moduli


def el(*c):
    return GroupRingElement.from_coeffs(c)


def test_validation():
    with pytest.raises(ValueError):
        validate_input(2, el(1, 1))
    with pytest.raises(ValueError):
        validate_input(3, el(-1, 1))
    with pytest.raises(ValueError):
        validate_input(2, el(0, 0), allow_zero=False)
    with pytest.raises(ValueError):
        validate_input(1, el(0))
    validate_input(2, el(-2, 2))


def test_special_family_pi2_and_H3():
    for f in range(2, 9):
        for xt in range(1, 7):
            x = special_x(f, xt)
            assert compute_pi2(f, x).group == FgAbelianGroup.from_cyclic_orders([xt] * (f - 1))
            h = compute_H3(f, x)
            assert h.rank == 1
            assert [list(b.coeffs) for b in h.basis] == [[1] * f]
            assert h.action_matrix == [[1]]


def test_zero_x_gives_free_pi2():
    p2 = compute_pi2(3, GroupRingElement.zero(3))
    assert p2.group == FgAbelianGroup((), 2)
    assert compute_H3(3, GroupRingElement.zero(3)).rank == 3


def test_pi2_action_has_order_f():
    for coeffs in ([-2, 1, 1], [3, -1, -1, -1], [2, 0, -2]):
        x = GroupRingElement.from_coeffs(coeffs)
        assert compute_pi2(x.f, x).module.action_order_ok()


def test_small_case_module():
    p = assemble_pi3(2, special_x(2, 2))
    assert p.assembled.group == FgAbelianGroup((4,), 1)
    assert p.assembled.action.as_lists() == [[1, 2], [0, 1]]
    assert not p.assembled.is_trivial_action()
    assert p.gamma.action.is_identity()
    assert p.H3.action_matrix == [[1]]


def test_closed_forms_on_special_family():
    for f in range(2, 7):
        for xt in range(1, 6):
            ok, details = closed_form_check(f, xt)
            assert ok, details


def test_cross_effects_require_kernel():
    x = special_x(2, 2)
    with pytest.raises(ValueError):
        cross_B(x, el(1, 0))
    with pytest.raises(ValueError):
        cross_A(x, el(1, 0), norm_element(2))


def test_nonzero_A_for_general_x():
    p = assemble_pi3(3, el(4, -3, -1))
    assert p.gamma.group == FgAbelianGroup((13,))
    assert any(any(a) for row in p.A_table for a in row)
    assert not verify_module_axioms(p)


def test_corrupted_B_is_detected():
    p = assemble_pi3(3, el(-2, 1, 1))
    assert not verify_module_axioms(p)
    G = p.gamma.group
    bad = [G.canonical([v + 1 for v in b]) for b in p.B_table]
    assert verify_module_axioms(with_B_table(p, bad))


@settings(max_examples=40)
@given(moduli.flatmap(augmentation_elements))
def test_module_axioms_for_random_x(x):
    p = assemble_pi3(x.f, x)
    assert verify_module_axioms(p) == []
    assert p.assembled.action_order_ok()


def test_twisted_and_linear_models_agree_on_random_elements():
    rng = random.Random(11)
    for coeffs in ([-2, 2], [-2, 1, 1], [4, -3, -1], [-2, 0, 2, 0]):
        x = GroupRingElement.from_coeffs(coeffs)
        p = assemble_pi3(x.f, x)
        G = p.gamma.group
        for _ in range(20):
            a = (tuple(rng.randint(-4, 4) for _ in range(p.rank)), G.canonical([rng.randint(-9, 9) for _ in G.moduli]))
            b = (tuple(rng.randint(-4, 4) for _ in range(p.rank)), G.canonical([rng.randint(-9, 9) for _ in G.moduli]))
            lin = [u + v for u, v in zip(p.to_linear(a), p.to_linear(b))]
            assert p.from_linear(lin) == p.twisted_add(a, b)
            assert p.from_linear(p.linear_act(p.to_linear(a))) == p.twisted_act(a)
