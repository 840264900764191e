"""Pseudo-projective 4-spaces P = P_{f,x,y,alpha}: the 4-cell is attached along
u_x(y) + alpha in pi_3 P_{f,x}.

Homology of the universal cover is computed for any f; the boundary
b: H_4 -> Gamma(pi_2) and pi_3 P are implemented for f = 2 with
x = xtilde([1] - [0]) and y = ytilde([1] + [0]).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gamma import GammaElement, gamma_pi2
from .pi3 import Pi1Module, Pi3Presentation, assemble_pi3, special_x
from .ring import GroupRingElement, act, basis_element, mult_operator_matrix, norm_element
from .zmod import AbMorphism, FgAbelianGroup, Quotient, basis_coordinates, kernel_basis, matmul


@dataclass(frozen=True)
class Dim4Input:
    f: int
    x: GroupRingElement
    y: GroupRingElement
    alpha: tuple[int, ...]  # Gamma(K) coordinates

    def __post_init__(self):
        if self.f < 2:
            raise ValueError("f must be at least 2")
        if self.x.f != self.f or self.y.f != self.f:
            raise ValueError("x and y must have f coefficients")
        if self.x.augmentation() != 0:
            raise ValueError("x must lie in the augmentation ideal")
        if self.x.is_zero() or self.y.is_zero():
            raise ValueError("x and y must be nonzero")
        if not (self.x * self.y).is_zero():
            raise ValueError("xy must vanish")
        if len(self.alpha) != (self.f - 1) * self.f // 2:
            raise ValueError(f"alpha needs {(self.f - 1) * self.f // 2} Gamma(K) coordinates")

    @classmethod
    def special(cls, xtilde: int, ytilde: int, alpha: Sequence[int] | int = 0) -> "Dim4Input":
        if xtilde == 0 or ytilde == 0:
            raise ValueError("xtilde and ytilde must be nonzero")
        a = (alpha,) if isinstance(alpha, int) else tuple(alpha)
        return cls(2, special_x(2, xtilde), ytilde * norm_element(2), a)

    @property
    def xtilde(self) -> int:
        return self.x.coeffs[1]

    @property
    def ytilde(self) -> int:
        return self.y.coeffs[0]


def chain_complex(inp: Dim4Input) -> list[list[list[int]]]:
    """Matrices of d_1..d_4 (each multiplication by an element of R)."""
    f = inp.f
    k1 = basis_element(f, 1) - basis_element(f, 0)
    return [mult_operator_matrix(e) for e in (k1, norm_element(f), inp.x, inp.y)]


def _action_on_basis(basis: list[list[int]]) -> list[list[int]]:
    cols = [basis_coordinates(basis, act(GroupRingElement.from_coeffs(b), 1).coeffs) for b in basis]
    r = len(basis)
    return [[cols[c][i] for c in range(r)] for i in range(r)]


@dataclass
class Homology34:
    H3: Pi1Module
    H3_quotient: Quotient
    H3_cycles: list[list[int]]
    H4: Pi1Module
    H4_basis: list[list[int]]


def homology_34(inp: Dim4Input) -> Homology34:
    d = chain_complex(inp)
    cycles = kernel_basis(d[2])
    bounds = [basis_coordinates(cycles, [row[j] for row in d[3]]) for j in range(inp.f)]
    q3 = Quotient(len(cycles), bounds)
    h3 = Pi1Module(inp.f, q3.group, q3.induced(_action_on_basis(cycles)))
    z4 = kernel_basis(d[3])
    g4 = FgAbelianGroup.free(len(z4))
    h4 = Pi1Module(inp.f, g4, AbMorphism.from_matrix(g4, g4, _action_on_basis(z4)))
    return Homology34(h3, q3, cycles, h4, z4)


def _require_f2(inp: Dim4Input) -> None:
    if inp.f != 2:
        raise NotImplementedError("the boundary b and pi_3 P are implemented only for f = 2")


def _attaching_element(inp: Dim4Input, p: Pi3Presentation) -> list[int]:
    """u_x(y) + alpha in the linear coordinates of pi_3 P_{2,x}."""
    yc = p.H3.coordinates(inp.y)
    v = p.gamma.reduce(GammaElement(inp.f, inp.alpha))
    return p.to_linear((tuple(yc), v))


def _times_ring(p: Pi3Presentation, z: Sequence[int], r: GroupRingElement) -> list[int]:
    """z . r = sum_i r_i z^i in the linear coordinates."""
    out = [0] * len(z)
    cur = list(z)
    for i in range(r.f):
        if r.coeffs[i]:
            out = [a + r.coeffs[i] * b for a, b in zip(out, cur)]
        cur = p.linear_act(cur)
    return out


@dataclass
class Boundary:
    generator: list[int]  # H_4 generator as an element of R
    closed_form: tuple[int, ...]
    model: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return self.closed_form == self.model


def boundary_b(inp: Dim4Input) -> Boundary:
    """b on the H_4 generator h = c([1] - [0]) by the closed form c xtilde ytilde xi
    and by evaluating (u_x(y) + alpha) . h in pi_3 P_{2,x}."""
    _require_f2(inp)
    p = assemble_pi3(2, inp.x)
    G = p.gamma
    h = homology_34(inp).H4_basis[0]
    c = h[1]
    closed = G.reduce(GammaElement.gamma_basis(2, 1) * (c * inp.xtilde * inp.ytilde))
    img = _times_ring(p, _attaching_element(inp, p), GroupRingElement.from_coeffs(h))
    r = p.rank
    if any(img[:r]):
        raise ArithmeticError("boundary image has a nonzero H_3 component")
    model = G.group.canonical(img[r:])
    return Boundary(h, closed, model)


@dataclass
class Pi3P:
    group: FgAbelianGroup
    action: AbMorphism
    coker_b: FgAbelianGroup
    ext_group: FgAbelianGroup  # coker b / ytilde coker b
    ext_class: tuple[int, ...]  # tau(-alpha)
    lift_check: bool

    @property
    def action_trivial(self) -> bool:
        return self.action.is_identity()


def pi3_of_P4(inp: Dim4Input) -> Pi3P:
    _require_f2(inp)
    p = assemble_pi3(2, inp.x)
    G = p.gamma
    r, n = p.rank, G.group.ngens
    z = _attaching_element(inp, p)
    rels = [[0] * r + [d if t == s else 0 for t in range(n)] for s, d in enumerate(G.group.moduli) if d]
    rels += [z, p.linear_act(z)]
    q = Quotient(r + n, rels)
    action = q.induced(p.ambient_action)

    b = boundary_b(inp).model
    torsion = [[d if t == s else 0 for t in range(n)] for s, d in enumerate(G.group.moduli) if d]
    coker = Quotient(n, torsion + [list(b)])
    yt = abs(inp.ytilde)
    ext = Quotient(n, torsion + [list(b)] + [[yt if t == s else 0 for t in range(n)] for s in range(n)])
    v = G.reduce(GammaElement(2, inp.alpha))
    cls = ext.reduce([-a for a in v])

    # ytilde times the lift u(N) of the generator of H_3 P equals the image of -alpha
    w = p.to_linear((tuple(p.H3.coordinates(norm_element(2))), G.zero()))
    lhs = q.reduce([inp.ytilde * a for a in w])
    rhs = q.reduce([0] * r + list(G.group.canonical([-a for a in v])))
    return Pi3P(q.group, action, coker.group, ext.group, cls, lhs == rhs)
