"""Exact arithmetic in the group ring R = Z[Z/f] and in R (x) R.

Elements of R are coefficient vectors indexed by 0..f-1 (coefficient of
[k] at index k).  Elements of R (x) R are f x f integer matrices whose
(a, b) entry is the coefficient of [a] (x) [b].  The cyclic group acts on
the right, x^k = x[k], which on coefficients is a cyclic shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class ModulusMismatch(ValueError):
    pass


def _check_modulus(f: int) -> None:
    if not isinstance(f, int) or f < 1:
        raise ValueError(f"modulus must be a positive integer, got {f!r}")


@dataclass(frozen=True, slots=True)
class GroupRingElement:
    f: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.f)
        if len(self.coeffs) != self.f:
            raise ValueError(f"expected {self.f} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "GroupRingElement":
        c = tuple(int(v) for v in coeffs)
        return cls(len(c), c)

    @classmethod
    def zero(cls, f: int) -> "GroupRingElement":
        return cls(f, (0,) * f)

    @classmethod
    def basis(cls, f: int, k: int) -> "GroupRingElement":
        """The group element [k] (k taken mod f)."""
        c = [0] * f
        c[k % f] = 1
        return cls(f, tuple(c))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k % self.f]

    def _same(self, other: "GroupRingElement") -> None:
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if other.f != self.f:
            raise ModulusMismatch(f"moduli differ: {self.f} vs {other.f}")

    def __add__(self, other):
        self._same(other)
        return GroupRingElement(self.f, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        return GroupRingElement(self.f, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupRingElement(self.f, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.f, tuple(other * a for a in self.coeffs))
        return gr_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def act(self, k: int) -> "GroupRingElement":
        return act(self, k)

    def augmentation(self) -> int:
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Cyclic convolution: sum of a_i b_j [i + j]."""
    a._same(b)
    f = a.f
    out = [0] * f
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                if bj:
                    out[(i + j) % f] += ai * bj
    return GroupRingElement(f, tuple(out))


def augmentation(a: GroupRingElement) -> int:
    return a.augmentation()


def act(a: GroupRingElement, k: int) -> GroupRingElement:
    """Right action by the generator power k: a^k = a[k]."""
    f = a.f
    k %= f
    return GroupRingElement(f, tuple(a.coeffs[(i - k) % f] for i in range(f)))


def norm_element(f: int) -> GroupRingElement:
    _check_modulus(f)
    return GroupRingElement(f, (1,) * f)


def augmentation_basis(f: int) -> list[GroupRingElement]:
    """The Z-basis k_i = [i] - [0], i = 1..f-1, of the augmentation ideal K."""
    return [basis_element(f, i) - basis_element(f, 0) for i in range(1, f)]


def basis_element(f: int, k: int) -> GroupRingElement:
    return GroupRingElement.basis(f, k)


def k_coordinates(a: GroupRingElement) -> list[int]:
    """Coordinates of a in the basis k_1..k_{f-1}; a must lie in K."""
    if a.augmentation() != 0:
        raise ValueError("element is not in the augmentation ideal")
    return list(a.coeffs[1:])


def from_k_coordinates(f: int, v: Sequence[int]) -> GroupRingElement:
    if len(v) != f - 1:
        raise ValueError(f"expected {f - 1} K-coordinates, got {len(v)}")
    return GroupRingElement(f, (-sum(v),) + tuple(int(c) for c in v))


def mult_operator_matrix(x: GroupRingElement) -> list[list[int]]:
    """Matrix of d_x: y -> xy; column j holds the coefficients of x[j]."""
    f = x.f
    return [[x.coeffs[(i - j) % f] for j in range(f)] for i in range(f)]


def parse_element(text: str, f: int | None = None) -> GroupRingElement:
    """Parse the comma-separated text form "c0,c1,...,c{f-1}"."""
    try:
        coeffs = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError as exc:
        raise ValueError(f"bad group ring element {text!r}: {exc}") from None
    if not coeffs:
        raise ValueError("empty coefficient list")
    if f is not None and len(coeffs) != f:
        raise ValueError(f"expected {f} coefficients, got {len(coeffs)}")
    return GroupRingElement.from_coeffs(coeffs)


# -- R (x) R ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TensorElement:
    f: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_modulus(self.f)
        if len(self.entries) != self.f or any(len(r) != self.f for r in self.entries):
            raise ValueError(f"tensor must be {self.f} x {self.f}")

    @classmethod
    def zero(cls, f: int) -> "TensorElement":
        return cls(f, ((0,) * f,) * f)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "TensorElement":
        return cls(len(rows), tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def from_flat(cls, f: int, flat: Sequence[int]) -> "TensorElement":
        if len(flat) != f * f:
            raise ValueError(f"expected {f * f} entries")
        return cls(f, tuple(tuple(int(v) for v in flat[i * f:(i + 1) * f]) for i in range(f)))

    def flat(self) -> list[int]:
        return [v for row in self.entries for v in row]

    def __getitem__(self, ab: tuple[int, int]) -> int:
        a, b = ab
        return self.entries[a % self.f][b % self.f]

    def _same(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError(f"expected TensorElement, got {type(other).__name__}")
        if other.f != self.f:
            raise ModulusMismatch(f"moduli differ: {self.f} vs {other.f}")

    def __add__(self, other):
        return tensor_add(self, other)

    def __sub__(self, other):
        return tensor_add(self, tensor_scale(other, -1))

    def __neg__(self):
        return tensor_scale(self, -1)

    def __mul__(self, n):
        if isinstance(n, int):
            return tensor_scale(self, n)
        return NotImplemented

    __rmul__ = __mul__

    def act(self, k: int) -> "TensorElement":
        return tensor_act(self, k)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)


def tensor(a: GroupRingElement, b: GroupRingElement) -> TensorElement:
    """The elementary tensor a (x) b."""
    a._same(b)
    return TensorElement(a.f, tuple(tuple(ai * bj for bj in b.coeffs) for ai in a.coeffs))


def tensor_basis(a: int, b: int, f: int) -> TensorElement:
    if not (0 <= a < f and 0 <= b < f):
        raise IndexError(f"basis index ({a}, {b}) out of range for f={f}")
    rows = [[0] * f for _ in range(f)]
    rows[a][b] = 1
    return TensorElement.from_rows(rows)


def tensor_add(s: TensorElement, t: TensorElement) -> TensorElement:
    s._same(t)
    return TensorElement(s.f, tuple(
        tuple(a + b for a, b in zip(rs, rt)) for rs, rt in zip(s.entries, t.entries)))


def tensor_scale(t: TensorElement, n: int) -> TensorElement:
    return TensorElement(t.f, tuple(tuple(n * v for v in row) for row in t.entries))


def tensor_act(t: TensorElement, k: int) -> TensorElement:
    """Diagonal action: (a (x) b)^k = a^k (x) b^k."""
    f = t.f
    k %= f
    e = t.entries
    return TensorElement(f, tuple(
        tuple(e[(i - k) % f][(j - k) % f] for j in range(f)) for i in range(f)))


def tensor_sum(terms: Iterable[TensorElement], f: int) -> TensorElement:
    acc = [[0] * f for _ in range(f)]
    for t in terms:
        if t.f != f:
            raise ModulusMismatch(f"moduli differ: {f} vs {t.f}")
        for i, row in enumerate(t.entries):
            r = acc[i]
            for j, v in enumerate(row):
                if v:
                    r[j] += v
    return TensorElement.from_rows(acc)
