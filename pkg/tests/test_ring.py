import pytest
from hypothesis import given, strategies as st

from pi3mod.ring import (
    GroupRingElement, ModulusMismatch, TensorElement, act, augmentation, basis_element, gr_mul,
    mult_operator_matrix, norm_element, parse_element, tensor, tensor_act, tensor_add, tensor_basis,
    tensor_scale,
)


def el(*c):
    return GroupRingElement.from_coeffs(c)


def test_mul_examples():
    assert gr_mul(el(0, 1), el(0, 1)) == el(1, 0)
    assert gr_mul(el(-1, 1), el(1, 1)).is_zero()
    assert gr_mul(el(0, 1, 1), el(0, 0, 1)) == el(1, 1, 0)


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        gr_mul(el(1, 0), el(1, 0, 0))


def test_augmentation_examples():
    assert augmentation(norm_element(4)) == 4
    assert augmentation(el(-1, 1)) == 0
    assert augmentation(el(-1, 0, 3)) == 2


def test_act_examples():
    assert act(basis_element(3, 0), 1) == basis_element(3, 1)
    assert act(el(-1, 1), 1) == el(1, -1)
    for k in range(-3, 7):
        assert act(norm_element(5), k) == norm_element(5)


def test_norm_examples():
    assert norm_element(2) == el(1, 1)
    assert norm_element(1) == el(1)
    assert norm_element(5).coeffs == (1,) * 5


def test_mult_operator_matrix():
    assert mult_operator_matrix(el(-1, 1)) == [[-1, 1], [1, -1]]
    assert mult_operator_matrix(el(1, 0, 0)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert mult_operator_matrix(norm_element(3)) == [[1] * 3] * 3


def test_tensor_plumbing():
    t = tensor_basis(0, 1, 2)
    assert tensor_add(t, t) == TensorElement.from_rows([[0, 2], [0, 0]])
    assert tensor_add(t, TensorElement.zero(2)) == t
    assert tensor_scale(t, -1) == TensorElement.from_rows([[0, -1], [0, 0]])
    with pytest.raises(IndexError):
        tensor_basis(2, 0, 2)


def test_tensor_act_examples():
    assert tensor_act(tensor_basis(0, 1, 3), 1) == tensor_basis(1, 2, 3)
    assert tensor_act(tensor_basis(0, 0, 4), 4) == tensor_basis(0, 0, 4)
    assert tensor_act(tensor_basis(1, 0, 2), 1) == tensor_basis(0, 1, 2)


def test_parse():
    assert parse_element("-2,2") == el(-2, 2)
    assert parse_element(" 1, 0 ,-1", 3) == el(1, 0, -1)
    with pytest.raises(ValueError):
        parse_element("1,2", 3)
    with pytest.raises(ValueError):
        parse_element("a,b")


def test_bad_modulus():
    with pytest.raises(ValueError):
        norm_element(0)


f_st = st.integers(1, 6)


@st.composite
def elements(draw, n=1, f=None):
    f = draw(f_st) if f is None else f
    out = [GroupRingElement.from_coeffs(draw(st.lists(st.integers(-9, 9), min_size=f, max_size=f)))
           for _ in range(n)]
    return out


@given(elements(3))
def test_ring_axioms(abc):
    a, b, c = abc
    assert gr_mul(a, b) == gr_mul(b, a)
    assert gr_mul(gr_mul(a, b), c) == gr_mul(a, gr_mul(b, c))
    assert gr_mul(a, b + c) == gr_mul(a, b) + gr_mul(a, c)
    assert gr_mul(a, basis_element(a.f, 0)) == a


@given(elements(2))
def test_augmentation_multiplicative(ab):
    a, b = ab
    assert augmentation(gr_mul(a, b)) == augmentation(a) * augmentation(b)
    assert gr_mul(a, norm_element(a.f)) == augmentation(a) * norm_element(a.f)


@given(elements(1), st.integers(-20, 20), st.integers(-20, 20))
def test_action_laws(a, j, k):
    (a,) = a
    assert act(a, j + k) == act(act(a, j), k)
    assert act(a, a.f) == a
    assert gr_mul(a, basis_element(a.f, k)) == act(a, k)


@given(elements(2), st.integers(-10, 10))
def test_tensor_action(ab, k):
    a, b = ab
    t = tensor(a, b)
    assert tensor_act(t, k) == tensor(act(a, k), act(b, k))
    out = t
    for _ in range(a.f):
        out = tensor_act(out, 1)
    assert out == t


@given(elements(2))
def test_mult_operator_matches_product(ab):
    x, y = ab
    col = [sum(r * c for r, c in zip(row, y.coeffs)) for row in mult_operator_matrix(x)]
    assert col == list(gr_mul(x, y).coeffs)
