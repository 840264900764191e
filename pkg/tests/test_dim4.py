from math import gcd

import pytest

from pi3mod.dim4 import Dim4Input, boundary_b, chain_complex, homology_34, pi3_of_P4
from pi3mod.ring import GroupRingElement, norm_element
from pi3mod.zmod import FgAbelianGroup, matmul


def el(*c):
    return GroupRingElement.from_coeffs(c)


def test_input_validation():
    with pytest.raises(ValueError):
        Dim4Input.special(0, 1)
    with pytest.raises(ValueError):
        Dim4Input(2, el(-1, 1), el(1, 0), (0,))
    with pytest.raises(ValueError):
        Dim4Input(2, el(1, 1), el(1, 1), (0,))
    with pytest.raises(ValueError):
        Dim4Input(2, el(-1, 1), el(1, 1), (0, 0))


def test_chain_complex_squares_to_zero():
    for inp in (Dim4Input.special(2, 3, 1), Dim4Input(3, el(-2, 1, 1), norm_element(3), (0, 0, 0))):
        d = chain_complex(inp)
        for a, b in zip(d, d[1:]):
            assert not any(any(r) for r in matmul(a, b))


def test_homology_of_general_f():
    inp = Dim4Input(3, el(-2, 1, 1), 5 * norm_element(3), (0, 0, 0))
    h = homology_34(inp)
    assert h.H3.group == FgAbelianGroup((5,))
    assert h.H4.group == FgAbelianGroup((), 2)
    with pytest.raises(NotImplementedError):
        pi3_of_P4(inp)


def test_homology_and_boundary_on_grid():
    for xt in range(1, 5):
        for yt in range(1, 5):
            for a in range(xt * gcd(xt, 2)):
                inp = Dim4Input.special(xt, yt, a)
                h = homology_34(inp)
                assert h.H3.group == FgAbelianGroup.from_cyclic_orders([yt])
                assert h.H3.is_trivial_action()
                assert h.H4.group == FgAbelianGroup((), 1)
                assert h.H4.action.as_lists() == [[-1]]
                b = boundary_b(inp)
                assert b.agree
                P = pi3_of_P4(inp)
                assert P.lift_check
                assert P.group.order() == yt * P.coker_b.order()


def test_action_trivial_exactly_when_one_factor_is_odd():
    for xt in range(1, 7):
        for yt in range(1, 7):
            for a in range(xt * gcd(xt, 2)):
                P = pi3_of_P4(Dim4Input.special(xt, yt, a))
                assert P.action_trivial == (xt % 2 == 1 or yt % 2 == 1), (xt, yt, a)


def test_even_even_counterexample_by_hand():
    # pi_3 of the 3-skeleton is Z + Z/4 (coordinates (a, v)) with generator action
    # (a, v) -> (a, v + 2a); the 4-cell kills (2, alpha).
    for alpha in (0, 1):
        subgroup = {(2 * n, (n * alpha) % 4) for n in range(-8, 9)}
        subgroup = {(a, (v + 4 * m) % 4) for a, v in subgroup for m in range(2)}
        moved = (0, 2)  # T(1, 0) - (1, 0)
        assert moved not in subgroup
        P = pi3_of_P4(Dim4Input.special(2, 2, alpha))
        assert not P.action_trivial
        assert P.group.order() == 8


def test_small_examples():
    P = pi3_of_P4(Dim4Input.special(2, 3, 0))
    assert P.group == FgAbelianGroup((6,)) and P.action_trivial
    assert P.coker_b == FgAbelianGroup((2,))
    P = pi3_of_P4(Dim4Input.special(2, 2, 1))
    assert boundary_b(Dim4Input.special(2, 2, 1)).model == (0,)
    assert P.coker_b == FgAbelianGroup((4,))
    assert P.group == FgAbelianGroup((8,))
    assert P.action.as_lists() == [[5]]
