"""Whitehead's quadratic functor on the augmentation ideal.

Gamma(K) is free on gamma(k_i) (i = 1..f-1) followed by the brackets
[k_i, k_j] (i < j, lexicographic), where k_i = [i] - [0].  It embeds in
R (x) R through gamma(a) -> a (x) a, [a, b] -> a (x) b + b (x) a, and
Gamma(pi_2) is presented as Gamma(K) / Delta_B with
Delta_B = Gamma(xR) + [K, xR].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

from .ring import GroupRingElement, TensorElement, act, k_coordinates
from .zmod import AbMorphism, FgAbelianGroup, Quotient


def gamma_rank(f: int) -> int:
    return (f - 1) * f // 2


@lru_cache(maxsize=None)
def _pairs(f: int) -> tuple[tuple[int, int], ...]:
    n = f - 1
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def _pair_index(f: int) -> dict:
    n = f - 1
    return {p: n + t for t, p in enumerate(_pairs(f))}


@dataclass(frozen=True, slots=True)
class GammaElement:
    f: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != gamma_rank(self.f):
            raise ValueError(f"expected {gamma_rank(self.f)} coordinates for f={self.f}, got {len(self.coords)}")

    @classmethod
    def zero(cls, f: int) -> "GammaElement":
        return cls(f, (0,) * gamma_rank(f))

    @classmethod
    def gamma_basis(cls, f: int, i: int) -> "GammaElement":
        """gamma(k_i) for 1 <= i <= f-1."""
        c = [0] * gamma_rank(f)
        c[i - 1] = 1
        return cls(f, tuple(c))

    def __add__(self, other: "GammaElement") -> "GammaElement":
        return GammaElement(self.f, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        return GammaElement(self.f, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GammaElement":
        return GammaElement(self.f, tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "GammaElement":
        return GammaElement(self.f, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)


def _check_len(v: Sequence[int], f: int) -> None:
    if len(v) != f - 1:
        raise ValueError(f"expected {f - 1} K-coordinates, got {len(v)}")


def gamma_expand(v: Sequence[int], f: int | None = None) -> GammaElement:
    """gamma(sum n_i k_i) = sum n_i^2 gamma(k_i) + sum_{i<j} n_i n_j [k_i, k_j]."""
    f = len(v) + 1 if f is None else f
    _check_len(v, f)
    c = [n * n for n in v] + [v[i] * v[j] for i, j in _pairs(f)]
    return GammaElement(f, tuple(c))


def bracket_expand(u: Sequence[int], v: Sequence[int], f: int | None = None) -> GammaElement:
    """[u, v] = gamma(u+v) - gamma(u) - gamma(v), bilinear and symmetric."""
    f = len(u) + 1 if f is None else f
    _check_len(u, f)
    _check_len(v, f)
    c = [2 * a * b for a, b in zip(u, v)] + [u[i] * v[j] + u[j] * v[i] for i, j in _pairs(f)]
    return GammaElement(f, tuple(c))


def _symmetric_matrix(g: GammaElement) -> list[list[int]]:
    n = g.f - 1
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        s[i][i] = g.coords[i]
    for t, (i, j) in enumerate(_pairs(g.f)):
        s[i][j] = s[j][i] = g.coords[n + t]
    return s


def tau_embed(g: GammaElement) -> TensorElement:
    """Image in K (x) K inside R (x) R."""
    f = g.f
    s = _symmetric_matrix(g)
    rows = [[0] * f for _ in range(f)]
    for a in range(1, f):
        for b in range(1, f):
            rows[a][b] = s[a - 1][b - 1]
    for a in range(1, f):
        rows[a][0] = -sum(s[a - 1])
        rows[0][a] = -sum(s[r][a - 1] for r in range(f - 1))
    rows[0][0] = sum(map(sum, s))
    return TensorElement.from_rows(rows)


def tau_preimage(t: TensorElement) -> GammaElement | None:
    """The unique g with tau_embed(g) == t, or None if t is not in the image."""
    f = t.f
    e = t.entries
    n = f - 1
    for i in range(n):
        for j in range(i + 1, n):
            if e[i + 1][j + 1] != e[j + 1][i + 1]:
                return None
    g = GammaElement(f, tuple([e[i + 1][i + 1] for i in range(n)] + [e[i + 1][j + 1] for i, j in _pairs(f)]))
    return g if tau_embed(g) == t else None


def gamma_act(g: GammaElement, k: int) -> GammaElement:
    """The diagonal action on Gamma(K) transported through tau_embed."""
    out = tau_preimage(tau_embed(g).act(k))
    assert out is not None
    return out


def _require_k(x: GroupRingElement) -> None:
    if x.augmentation() != 0:
        raise ValueError(f"x = ({x}) is not in the augmentation ideal")


def delta_B_coordinates(f: int, x: GroupRingElement) -> list[GammaElement]:
    """Generators of Delta_B in Gamma(K) coordinates."""
    if x.f != f:
        raise ValueError(f"x has modulus {x.f}, expected {f}")
    _require_k(x)
    xs = [k_coordinates(act(x, j)) for j in range(f)]
    gens = [gamma_expand(v, f) for v in xs]
    gens += [bracket_expand(xs[i], xs[j], f) for i in range(f) for j in range(i + 1, f)]
    for i in range(1, f):
        ki = [int(r == i - 1) for r in range(f - 1)]
        gens += [bracket_expand(ki, v, f) for v in xs]
    return gens


def delta_B_generators(f: int, x: GroupRingElement) -> list[TensorElement]:
    return [tau_embed(g) for g in delta_B_coordinates(f, x)]


class GammaPi2:
    """Gamma(pi_2) = Gamma(K) / Delta_B with its pi_1-action."""

    def __init__(self, f: int, x: GroupRingElement):
        if f < 2:
            raise ValueError(f"f must be at least 2, got {f}")
        self.f = f
        self.x = x
        self.quotient = Quotient(gamma_rank(f), [g.coords for g in delta_B_coordinates(f, x)])
        self.group = self.quotient.group
        n = gamma_rank(f)
        cols = [gamma_act(GammaElement(f, tuple(int(r == c) for r in range(n))), 1).coords for c in range(n)]
        self.ambient_action = [[cols[c][r] for c in range(n)] for r in range(n)]
        self.action = self.quotient.induced(self.ambient_action)

    def reduce(self, g: GammaElement | Sequence[int]) -> tuple[int, ...]:
        coords = g.coords if isinstance(g, GammaElement) else g
        return self.quotient.reduce(coords)

    def reduce_tensor(self, t: TensorElement) -> tuple[int, ...]:
        """Reduce a tensor known to lie in the image of Gamma(K)."""
        g = tau_preimage(t)
        if g is None:
            raise ValueError("tensor does not lie in the image of Gamma(K)")
        return self.reduce(g)

    def lift(self, coords: Sequence[int]) -> GammaElement:
        return GammaElement(self.f, tuple(self.quotient.lift(coords)))

    def gamma_of_k(self, v: Sequence[int]) -> tuple[int, ...]:
        """gamma(q(a)) for a in K given by its K-coordinates."""
        return self.reduce(gamma_expand(v, self.f))

    def act(self, coords: Sequence[int], k: int = 1) -> tuple[int, ...]:
        out = self.group.canonical(coords)
        for _ in range(k % self.f):
            out = self.action.apply(out)
        return out

    def add(self, u, v) -> tuple[int, ...]:
        return self.group.add(u, v)

    def scale(self, u, n: int) -> tuple[int, ...]:
        return self.group.canonical([n * c for c in u])

    def zero(self) -> tuple[int, ...]:
        return self.group.zero()


@lru_cache(maxsize=256)
def _gamma_pi2_cached(f: int, coeffs: tuple[int, ...]) -> GammaPi2:
    return GammaPi2(f, GroupRingElement(f, coeffs))


def gamma_pi2(f: int, x: GroupRingElement) -> GammaPi2:
    if x.f != f:
        raise ValueError(f"x has modulus {x.f}, expected {f}")
    _require_k(x)
    return _gamma_pi2_cached(f, x.coeffs)


def gamma_of_cyclic(d: int) -> FgAbelianGroup:
    """Gamma(Z) = Z and Gamma(Z/d) = Z/(d gcd(d, 2))."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        return FgAbelianGroup((), 1)
    return FgAbelianGroup.from_cyclic_orders([d * gcd(d, 2)])


def gamma_order_from_invariants(orders: Sequence[int]) -> int:
    """|Gamma(Z/d_1 + ... + Z/d_t)| via Gamma(A + B) = Gamma(A) + A (x) B + Gamma(B)."""
    total = 1
    for i, d in enumerate(orders):
        total *= d * gcd(d, 2)
        for e in orders[i + 1:]:
            total *= gcd(d, e)
    return total
