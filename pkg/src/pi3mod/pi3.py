"""pi_2, H_3 and pi_3 of the pseudo-projective 3-space P_{f,x} as pi_1-modules.

pi_3 is assembled from a splitting u of Gamma(pi_2) >-> pi_3 ->> H_3 through
its cross-effects A(y, z) = u(y+z) - (u(y) + u(z)) and
B(y) = u(y)^1 - u(y^1).  In twisted coordinates (y, v) <-> u(y) + v,

    (y, v) + (z, w) = (y + z, v + w - A(y, z)),   (y, v)^1 = (y^1, v^1 + B(y)).

With Q(y) = sum_i C(y_i, 2) A_ii + sum_{i<j} y_i y_j A_ij on an H_3 basis,
(y, v) -> (y, v + Q(y)) is an isomorphism onto H_3 + Gamma(pi_2) with the
ordinary sum, and there the action is the matrix [[T_H, 0], [B', T_G]] with
B'(y) = B(y) - T_G Q(y) + Q(y^1), which is linear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import _signs
from .gamma import GammaElement, GammaPi2, gamma_expand, gamma_pi2, tau_preimage
from .nil2 import mu, mu_cross
from .quad import psi, psi_bar_1
from .ring import GroupRingElement, TensorElement, act, from_k_coordinates, k_coordinates, mult_operator_matrix, tensor_act
from .zmod import AbMorphism, FgAbelianGroup, Quotient, basis_coordinates, kernel_basis, matvec


@dataclass(frozen=True)
class Pi1Module:
    """A f.g. abelian group with the action T of the generator of Z/f."""

    f: int
    group: FgAbelianGroup
    action: AbMorphism

    def act(self, v: Sequence[int], k: int = 1) -> tuple[int, ...]:
        out = self.group.canonical(v)
        for _ in range(k % self.f):
            out = self.action.apply(out)
        return out

    def action_order_ok(self) -> bool:
        return self.action.power(self.f).is_identity()

    def is_trivial_action(self) -> bool:
        return self.action.is_identity()


def validate_input(f: int, x: GroupRingElement, allow_zero: bool = True) -> None:
    if not isinstance(f, int) or f < 2:
        raise ValueError(f"f must be an integer >= 2, got {f!r}")
    if x.f != f:
        raise ValueError(f"x has {x.f} coefficients, expected f = {f}")
    if x.augmentation() != 0:
        raise ValueError(f"x = ({x}) has augmentation {x.augmentation()}, must be 0")
    if not allow_zero and x.is_zero():
        raise ValueError("x = 0 is not supported: pi_2 = K is infinite")


def special_x(f: int, xtilde: int) -> GroupRingElement:
    """x = xtilde ([1] - [0])."""
    return from_k_coordinates(f, [xtilde] + [0] * (f - 2))


# -- pi_2 and H_3 ------------------------------------------------------------


class Pi2:
    """pi_2 = K / xR with the K-basis k_i = [i] - [0]."""

    def __init__(self, f: int, x: GroupRingElement):
        validate_input(f, x)
        self.f, self.x = f, x
        n = f - 1
        self.quotient = Quotient(n, [k_coordinates(act(x, j)) for j in range(f)])
        cols = [k_coordinates(act(from_k_coordinates(f, [int(r == c) for r in range(n)]), 1)) for c in range(n)]
        self.k_action = [[cols[c][r] for c in range(n)] for r in range(n)]
        self.module = Pi1Module(f, self.quotient.group, self.quotient.induced(self.k_action))

    @property
    def group(self) -> FgAbelianGroup:
        return self.module.group

    def q(self, v: Sequence[int]) -> tuple[int, ...]:
        """The class of a K-vector."""
        return self.quotient.reduce(v)

    def lift(self, coords: Sequence[int]) -> list[int]:
        return self.quotient.lift(coords)


@lru_cache(maxsize=256)
def _pi2(f: int, coeffs: tuple[int, ...]) -> Pi2:
    return Pi2(f, GroupRingElement(f, coeffs))


def compute_pi2(f: int, x: GroupRingElement) -> Pi2:
    validate_input(f, x)
    return _pi2(f, x.coeffs)


class H3:
    """ker(d_x) with the deterministic kernel basis."""

    def __init__(self, f: int, x: GroupRingElement):
        validate_input(f, x)
        self.f, self.x = f, x
        self.basis = [GroupRingElement(f, tuple(v)) for v in kernel_basis(mult_operator_matrix(x))]
        r = len(self.basis)
        cols = [basis_coordinates([b.coeffs for b in self.basis], act(b, 1).coeffs) for b in self.basis]
        self.action_matrix = [[cols[c][i] for c in range(r)] for i in range(r)]
        g = FgAbelianGroup.free(r)
        self.module = Pi1Module(f, g, AbMorphism.from_matrix(g, g, self.action_matrix))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def element(self, c: Sequence[int]) -> GroupRingElement:
        out = GroupRingElement.zero(self.f)
        for ci, b in zip(c, self.basis):
            if ci:
                out = out + ci * b
        return out

    def coordinates(self, y: GroupRingElement) -> list[int]:
        return basis_coordinates([b.coeffs for b in self.basis], y.coeffs)

    def act(self, c: Sequence[int], k: int = 1) -> list[int]:
        out = list(c)
        for _ in range(k % self.f):
            out = matvec(self.action_matrix, out)
        return out


@lru_cache(maxsize=256)
def _h3(f: int, coeffs: tuple[int, ...]) -> H3:
    return H3(f, GroupRingElement(f, coeffs))


def compute_H3(f: int, x: GroupRingElement) -> H3:
    validate_input(f, x)
    return _h3(f, x.coeffs)


# -- cross-effects -------------------------------------------------------------


class CrossEffectError(ArithmeticError):
    """A cross-effect tensor failed to land in Gamma(K); indicates a defect in the formulas."""


def _check_kernel(x: GroupRingElement, *ys: GroupRingElement) -> None:
    for y in ys:
        if not (x * y).is_zero():
            raise ValueError(f"y = ({y}) is not in H_3 = ker(d_x)")


def _to_gamma(t: TensorElement, what: str) -> GammaElement:
    g = tau_preimage(t)
    if g is None:
        raise CrossEffectError(f"{what} does not lie in Gamma(K)")
    return g


def cross_A_tensor(x: GroupRingElement, y: GroupRingElement, z: GroupRingElement) -> TensorElement:
    return psi(y, z, x) - mu_cross(x, y, z)


def cross_B_tensor(x: GroupRingElement, y: GroupRingElement) -> TensorElement:
    return psi_bar_1(y, x) - tensor_act(mu(x, y), 1) + mu(x, act(y, 1))


def cross_A(x: GroupRingElement, y: GroupRingElement, z: GroupRingElement) -> tuple[int, ...]:
    """A(y, z) in Gamma(pi_2) coordinates."""
    _check_kernel(x, y, z)
    return gamma_pi2(x.f, x).reduce(_to_gamma(cross_A_tensor(x, y, z), "A(y, z)"))


def cross_B(x: GroupRingElement, y: GroupRingElement) -> tuple[int, ...]:
    """B(y) in Gamma(pi_2) coordinates."""
    _check_kernel(x, y)
    return gamma_pi2(x.f, x).reduce(_to_gamma(cross_B_tensor(x, y), "B(y)"))


# -- assembly ------------------------------------------------------------------


@dataclass
class Pi3Presentation:
    f: int
    x: GroupRingElement
    pi2: Pi2
    H3: H3
    gamma: GammaPi2
    A_table: list[list[tuple[int, ...]]]
    B_table: list[tuple[int, ...]]
    B_linear: list[tuple[int, ...]]
    assembled: Pi1Module
    quotient: Quotient
    ambient_action: list[list[int]] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.H3.rank

    # twisted-coordinate arithmetic, (y, v) with y in H_3 coordinates
    def A(self, c: Sequence[int], d: Sequence[int]) -> tuple[int, ...]:
        G = self.gamma.group
        acc = [0] * G.ngens
        for i, ci in enumerate(c):
            if not ci:
                continue
            for j, dj in enumerate(d):
                if dj:
                    for t, a in enumerate(self.A_table[i][j]):
                        acc[t] += ci * dj * a
        return G.canonical(acc)

    def Q(self, c: Sequence[int]) -> tuple[int, ...]:
        G = self.gamma.group
        acc = [0] * G.ngens
        r = len(c)
        for i in range(r):
            k = c[i] * (c[i] - 1) // 2
            for t, a in enumerate(self.A_table[i][i]):
                acc[t] += k * a
            for j in range(i + 1, r):
                k = c[i] * c[j]
                for t, a in enumerate(self.A_table[i][j]):
                    acc[t] += k * a
        return G.canonical(acc)

    def twisted_add(self, p, q):
        (y, v), (z, w) = p, q
        G = self.gamma.group
        a = self.A(y, z)
        return tuple(s + t for s, t in zip(y, z)), G.canonical([s + t - u for s, t, u in zip(v, w, a)])

    def twisted_act(self, p, b_func=None):
        """(y, v)^1 = (y^1, v^1 + B(y)); b_func computes B on H_3 coordinates."""
        y, v = p
        b = (b_func or self.B_direct)(y)
        return tuple(self.H3.act(y)), self.gamma.group.canonical(
            [s + t for s, t in zip(self.gamma.act(v), b)])

    def B_direct(self, c: Sequence[int]) -> tuple[int, ...]:
        return cross_B(self.x, self.H3.element(c))

    def to_linear(self, p) -> list[int]:
        """Ambient coordinates (y, v + Q(y)) of the assembled module."""
        y, v = p
        return list(y) + list(self.gamma.group.canonical([s + t for s, t in zip(v, self.Q(y))]))

    def from_linear(self, amb: Sequence[int]):
        r = self.rank
        y = tuple(amb[:r])
        v = self.gamma.group.canonical([s - t for s, t in zip(amb[r:], self.Q(y))])
        return y, v

    def linear_act(self, amb: Sequence[int]) -> list[int]:
        out = matvec(self.ambient_action, amb)
        r = self.rank
        return out[:r] + list(self.gamma.group.canonical(out[r:]))


def _ambient_action(h3: H3, G: GammaPi2, B_linear) -> list[list[int]]:
    r, n = h3.rank, G.group.ngens
    T_G = G.action.as_lists()
    M = [[0] * (r + n) for _ in range(r + n)]
    for i in range(r):
        for j in range(r):
            M[i][j] = h3.action_matrix[i][j]
    for j in range(r):
        for t in range(n):
            M[r + t][j] = B_linear[j][t]
    for s in range(n):
        for t in range(n):
            M[r + s][r + t] = T_G[s][t]
    return M


def assemble_pi3(f: int, x: GroupRingElement) -> Pi3Presentation:
    validate_input(f, x, allow_zero=False)
    return _assemble(f, x.coeffs, tuple(_signs.SIGN.values()))


@lru_cache(maxsize=256)
def _assemble(f: int, coeffs: tuple[int, ...], _signature) -> Pi3Presentation:
    x = GroupRingElement(f, coeffs)
    pi2 = compute_pi2(f, x)
    h3 = compute_H3(f, x)
    G = gamma_pi2(f, x)
    r = h3.rank
    A_table = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            A_table[i][j] = cross_A(x, h3.basis[i], h3.basis[j])
            if j > i:
                A_table[j][i] = cross_A(x, h3.basis[j], h3.basis[i])
    B_table = [cross_B(x, b) for b in h3.basis]
    p = Pi3Presentation(f, x, pi2, h3, G, A_table, B_table, [], None, None, [])
    p.B_linear = linear_B_table(p)
    return _finish(p)


def _finish(p: Pi3Presentation) -> Pi3Presentation:
    r, G = p.rank, p.gamma.group
    p.ambient_action = _ambient_action(p.H3, p.gamma, p.B_linear)
    rels = [[0] * r + [d if t == s else 0 for t in range(G.ngens)] for s, d in enumerate(G.moduli) if d]
    p.quotient = Quotient(r + G.ngens, rels)
    p.assembled = Pi1Module(p.f, p.quotient.group, p.quotient.induced(p.ambient_action))
    return p


def linear_B_table(p: Pi3Presentation) -> list[tuple[int, ...]]:
    """B'(b_i) = B(b_i) + Q(b_i^1) for the additive splitting u'(b_i) = (b_i, 0)."""
    G = p.gamma.group
    out = []
    for i, b in enumerate(p.B_table):
        e = [int(j == i) for j in range(p.rank)]
        out.append(G.canonical([s + t for s, t in zip(b, p.Q(p.H3.act(e)))]))
    return out


def with_B_table(p: Pi3Presentation, B_table) -> Pi3Presentation:
    """A copy of p with replaced B values (used for negative controls)."""
    q = Pi3Presentation(p.f, p.x, p.pi2, p.H3, p.gamma, p.A_table, [tuple(b) for b in B_table], [], None, None, [])
    q.B_linear = linear_B_table(q)
    try:
        return _finish(q)
    except ValueError:
        # the corrupted action need not preserve the relations; keep the raw data
        q.ambient_action = _ambient_action(q.H3, q.gamma, q.B_linear)
        return q


def verify_module_axioms(p: Pi3Presentation) -> list[str]:
    """All violated identities of the assembled module (empty when consistent)."""
    problems = []
    r, G = p.rank, p.gamma
    basis = [[int(j == i) for j in range(r)] for i in range(r)]
    for i in range(r):
        for j in range(r):
            if p.A_table[i][j] != p.A_table[j][i]:
                problems.append(f"A not symmetric at ({i}, {j})")
    for i in range(r):
        for j in range(i, r):
            s = [a + b for a, b in zip(basis[i], basis[j])]
            lhs = G.group.canonical([u - v - w for u, v, w in zip(p.B_direct(s), p.B_table[i], p.B_table[j])])
            rhs = G.group.canonical([u - v for u, v in zip(
                G.act(p.A(basis[i], basis[j])), p.A(p.H3.act(basis[i]), p.H3.act(basis[j])))])
            if lhs != rhs:
                problems.append(f"B cocycle identity fails on basis pair ({i}, {j}): {lhs} != {rhs}")
    for i in range(r):
        if p.B_direct(basis[i]) != tuple(p.B_table[i]):
            problems.append(f"B table entry {i} differs from the direct evaluation")
    # twisted law and linear model agree on small sample elements
    samples = [(tuple(b), G.zero()) for b in basis]
    samples += [(tuple(0 for _ in range(r)), G.group.canonical([int(t == s) for t in range(G.group.ngens)]))
                for s in range(G.group.ngens)]
    if r:
        samples.append((tuple(2 if k == 0 else -1 for k in range(r)), G.zero()))
    for a in samples:
        for b in samples:
            if p.twisted_add(a, b) != p.twisted_add(b, a):
                problems.append("twisted addition is not commutative")
            for c in samples[:3]:
                if p.twisted_add(p.twisted_add(a, b), c) != p.twisted_add(a, p.twisted_add(b, c)):
                    problems.append("twisted addition is not associative")
    for a in samples:
        lin = p.linear_act(p.to_linear(a))
        tw = p.to_linear(p.twisted_act(a))
        if list(lin) != list(tw):
            problems.append(f"linear action disagrees with the twisted action at {a}")
    if p.assembled is None:
        problems.append("assembled action does not preserve the relations")
    elif not p.assembled.action_order_ok():
        problems.append("assembled action does not have order dividing f")
    return list(dict.fromkeys(problems))


def gamma_q_k1(p_or_gamma, f: int | None = None) -> tuple[int, ...]:
    """gamma(q(k_1)) in Gamma(pi_2) coordinates."""
    G = p_or_gamma.gamma if isinstance(p_or_gamma, Pi3Presentation) else p_or_gamma
    return G.gamma_of_k([1] + [0] * (G.f - 2))


def closed_form_check(f: int, xtilde: int, ytildes: Sequence[int] = (1, 2, 3)) -> tuple[bool, list[str]]:
    """Compare A and B for x = xtilde k_1 against A = 0, B(yN) = -xtilde y gamma q(k_1)."""
    if xtilde == 0:
        raise ValueError("xtilde must be nonzero")
    x = special_x(f, xtilde)
    p = assemble_pi3(f, x)
    G = p.gamma
    details = []
    zero = G.zero()
    h3 = p.H3
    for i in range(h3.rank):
        for j in range(h3.rank):
            if p.A_table[i][j] != zero:
                details.append(f"A(b{i}, b{j}) = {p.A_table[i][j]} != 0")
    N = GroupRingElement(f, (1,) * f)
    g = gamma_q_k1(G)
    for yt in ytildes:
        got = cross_B(x, yt * N)
        want = G.scale(g, -xtilde * yt)
        if got != want:
            details.append(f"B({yt}N) = {got}, expected {want}")
    return not details, details
