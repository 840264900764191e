"""Integer linear algebra: Smith normal form, kernels, cokernels, lattice
quotients and linear congruence systems over Z.

Matrices are lists of rows of Python ints; every computation is exact.
Finitely generated abelian groups are kept in canonical form
Z/d_1 + ... + Z/d_t + Z^r with d_1 | d_2 | ... | d_t, d_i >= 2.  Element
coordinates list the torsion part first (each reduced into [0, d_i)) and
then the free part.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    ncols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else []
    out = []
    for row in a:
        out.append([sum(row[k] * col[k] for k in range(inner)) for col in bt] if bt else [0] * ncols)
    return out


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence[int]], nrows: int = 0) -> Matrix:
    if not a:
        return [[] for _ in range(nrows)]
    return [list(c) for c in zip(*a)]


def columns_to_matrix(cols: Sequence[Sequence[int]], nrows: int) -> Matrix:
    """Stack column vectors into an nrows x len(cols) matrix."""
    for c in cols:
        if len(c) != nrows:
            raise ValueError(f"column of length {len(c)} in a matrix with {nrows} rows")
    return [[c[i] for c in cols] for i in range(nrows)]


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# -- Smith normal form -------------------------------------------------------


@dataclass
class _Smith:
    U: Matrix
    U_inv: Matrix
    D: Matrix
    V: Matrix
    rank: int

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(self.rank)]


def _smith(a: Sequence[Sequence[int]], m: int, n: int) -> _Smith:
    D = [list(map(int, row)) for row in a]
    U, Ui, V = identity(m), identity(m), identity(n)

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]
        for row in Ui:
            row[i], row[k] = row[k], row[i]

    def swap_cols(j, k):
        for mat in (D, V):
            for row in mat:
                row[j], row[k] = row[k], row[j]

    def add_row(i, t, q):
        # row_i += q * row_t
        Di, Dt = D[i], D[t]
        for c in range(n):
            if Dt[c]:
                Di[c] += q * Dt[c]
        Ui_, Ut = U[i], U[t]
        for c in range(m):
            if Ut[c]:
                Ui_[c] += q * Ut[c]
        for row in Ui:
            if row[i]:
                row[t] -= q * row[i]

    def add_col(j, t, q):
        # col_j += q * col_t
        for mat in (D, V):
            for row in mat:
                if row[t]:
                    row[j] += q * row[t]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                best = None
                for i in range(t, m):
                    v = D[i][t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, t)
                for j in range(t + 1, n):
                    v = D[t][j]
                    if v and abs(v) < best[0]:
                        best = (abs(v), t, j)
                _, i, j = best
                if i != t:
                    swap_rows(t, i)
                if j != t:
                    swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, m):
                row = D[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
            for row in Ui:
                row[t] = -row[t]
        t += 1
    return _Smith(U, Ui, D, V, t)


def _shape(a: Sequence[Sequence[int]], ncols: int | None) -> tuple[int, int]:
    m = len(a)
    if m:
        n = len(a[0])
        if any(len(r) != n for r in a):
            raise ValueError("ragged matrix")
        if ncols is not None and ncols != n:
            raise ValueError(f"matrix has {n} columns, expected {ncols}")
        return m, n
    return 0, (ncols or 0)


def smith_normal_form(a: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U a V = D diagonal, d_1 | d_2 | ..., U and V unimodular.

    Pivots are chosen as the nonzero entry of least absolute value, scanning
    rows then columns, so the transforms are reproducible.
    """
    m, n = _shape(a, ncols)
    s = _smith(a, m, n)
    return s.U, s.D, s.V


def invariant_factors(a: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    m, n = _shape(a, ncols)
    return _smith(a, m, n).diagonal


def kernel_basis(a: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """A Z-basis of {v : a v = 0}.  Each vector has its first nonzero entry positive."""
    m, n = _shape(a, ncols)
    s = _smith(a, m, n)
    basis = []
    for j in range(s.rank, n):
        v = [s.V[i][j] for i in range(n)]
        lead = next(c for c in v if c)
        basis.append(v if lead > 0 else [-c for c in v])
    return basis


# -- abelian groups ----------------------------------------------------------


@dataclass(frozen=True)
class FgAbelianGroup:
    torsion: tuple[int, ...]
    rank: int = 0

    def __post_init__(self):
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors {self.torsion} break the divisibility chain")
        if self.rank < 0:
            raise ValueError("negative rank")

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> "FgAbelianGroup":
        """Canonical form of the direct sum of Z/n for n in orders (n = 0 means Z)."""
        k = len(orders)
        d = invariant_factors([[orders[i] if i == j else 0 for j in range(k)] for i in range(k)], k)
        torsion = tuple(v for v in d if v > 1)
        return cls(torsion, k - len(d))

    @classmethod
    def free(cls, rank: int) -> "FgAbelianGroup":
        return cls((), rank)

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.rank

    @property
    def moduli(self) -> tuple[int, ...]:
        """Per-coordinate modulus; 0 for free coordinates."""
        return self.torsion + (0,) * self.rank

    def is_finite(self) -> bool:
        return self.rank == 0

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def order(self) -> int | None:
        """Group order, or None if infinite."""
        return prod(self.torsion) if self.rank == 0 else None

    def exponent(self) -> int:
        """Exponent of the torsion subgroup (0 if the group has a free part)."""
        if self.rank:
            return 0
        return self.torsion[-1] if self.torsion else 1

    def canonical(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ngens:
            raise ValueError(f"expected {self.ngens} coordinates, got {len(v)}")
        return tuple(c % d if d else c for c, d in zip(v, self.moduli))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def element_order(self, v: Sequence[int]) -> int:
        """Order of an element; 0 means infinite order."""
        c = self.canonical(v)
        if any(c[len(self.torsion):]):
            return 0
        return lcm(1, *(d // gcd(x, d) for x, d in zip(c, self.torsion)))

    def add(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        return self.canonical([a + b for a, b in zip(u, v)])

    def direct_sum(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        return FgAbelianGroup.from_cyclic_orders(self.moduli + other.moduli)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AbMorphism:
    """Homomorphism between canonical groups given by an integer matrix in
    canonical coordinates (column j is the image of generator j)."""

    source: FgAbelianGroup
    target: FgAbelianGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != self.target.ngens or any(len(r) != self.source.ngens for r in self.matrix):
            raise ValueError("matrix shape does not match source/target")

    @classmethod
    def from_matrix(cls, source, target, matrix) -> "AbMorphism":
        """Build a morphism, reducing every column into canonical target coordinates."""
        cols = [target.canonical([row[j] for row in matrix]) for j in range(source.ngens)]
        rows = tuple(tuple(c[i] for c in cols) for i in range(target.ngens))
        m = cls(source, target, rows)
        m.check()
        return m

    @classmethod
    def identity(cls, group: FgAbelianGroup) -> "AbMorphism":
        return cls.from_matrix(group, group, identity(group.ngens))

    def check(self) -> None:
        """Raise if a torsion generator of order d is not sent to an element killed by d."""
        for j, d in enumerate(self.source.torsion):
            image = self.column(j)
            if any(self.target.canonical([d * c for c in image])):
                raise ValueError(f"generator {j} of order {d} does not map to an element of order dividing {d}")

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.target.canonical(matvec(self.matrix, v))

    def compose(self, inner: "AbMorphism") -> "AbMorphism":
        """self o inner."""
        if inner.target != self.source:
            raise ValueError("cannot compose: groups do not match")
        return AbMorphism.from_matrix(inner.source, self.target, matmul(self.matrix, inner.matrix, self.source.ngens))

    def power(self, k: int) -> "AbMorphism":
        if self.source != self.target:
            raise ValueError("power of a non-endomorphism")
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = AbMorphism.identity(self.source)
        for _ in range(k):
            out = self.compose(out)
        return out

    def is_identity(self) -> bool:
        return self.source == self.target and self == AbMorphism.identity(self.source)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


# -- quotients ---------------------------------------------------------------


class Quotient:
    """Z^n modulo the sublattice spanned by given generators, in canonical form.

    ``reduce`` sends an ambient vector to canonical coordinates and ``lift``
    returns an ambient representative of canonical coordinates.
    """

    def __init__(self, ambient_dim: int, generators: Sequence[Sequence[int]]):
        n = ambient_dim
        gens = [list(map(int, g)) for g in generators]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator of length {len(g)} in ambient dimension {n}")
        self.ambient_dim = n
        self.generators = gens
        s = _smith(columns_to_matrix(gens, n), n, len(gens))
        diag = s.diagonal
        keep = [i for i in range(s.rank) if diag[i] != 1] + list(range(s.rank, n))
        self.group = FgAbelianGroup(tuple(diag[i] for i in range(s.rank) if diag[i] != 1), n - s.rank)
        self._proj = [s.U[i] for i in keep]
        self._lift = [[s.U_inv[r][i] for r in range(n)] for i in keep]

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ambient_dim:
            raise ValueError(f"expected ambient vector of length {self.ambient_dim}, got {len(v)}")
        return self.group.canonical(matvec(self._proj, v))

    def lift(self, coords: Sequence[int]) -> list[int]:
        c = self.group.canonical(coords)
        out = [0] * self.ambient_dim
        for ci, col in zip(c, self._lift):
            if ci:
                for r, x in enumerate(col):
                    out[r] += ci * x
        return out

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    @property
    def projection_matrix(self) -> Matrix:
        return [list(r) for r in self._proj]

    def induced(self, endo: Sequence[Sequence[int]], target: "Quotient | None" = None) -> AbMorphism:
        """Morphism induced on quotients by an ambient integer matrix.

        Raises ValueError if the matrix does not carry the sublattice into the
        target's sublattice.
        """
        target = target or self
        for g in self.generators:
            if not target.contains(matvec(endo, g)):
                raise ValueError("map does not preserve the relation sublattice")
        cols = [target.reduce(matvec(endo, col)) for col in self._lift]
        rows = [[c[i] for c in cols] for i in range(target.group.ngens)]
        return AbMorphism.from_matrix(self.group, target.group, rows)


def quotient_lattice(ambient_dim: int, generators: Sequence[Sequence[int]]) -> Quotient:
    return Quotient(ambient_dim, generators)


def cokernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> Quotient:
    """Z^m / (column span of a), with projection witness."""
    m, n = _shape(a, ncols)
    return Quotient(m, [[a[i][j] for i in range(m)] for j in range(n)])


# -- congruence systems --------------------------------------------------------


def _solve(a, rhs, moduli, ncols):
    m, n = _shape(a, ncols)
    if len(rhs) != m or len(moduli) != m:
        raise ValueError(f"system has {m} rows but rhs has {len(rhs)} and moduli {len(moduli)} entries")
    if any(q < 0 for q in moduli):
        raise ValueError("moduli must be nonnegative")
    slack = [i for i, q in enumerate(moduli) if q]
    full = [list(a[i]) + [moduli[i] if i == k else 0 for k in slack] for i in range(m)]
    width = n + len(slack)
    s = _smith(full, m, width)
    r = matvec(s.U, rhs)
    z = [0] * width
    for i in range(m):
        if i < s.rank:
            d = s.D[i][i]
            if r[i] % d:
                return None, (list(s.U[i]), d)
            z[i] = r[i] // d
        elif r[i]:
            return None, (list(s.U[i]), abs(r[i]) + 1)
    sol = matvec(s.V, z)[:n]
    return sol, None


def solve_with_moduli(a, rhs, moduli, ncols: int | None = None) -> list[int] | None:
    """Some integer v with (a v)_i = rhs_i mod moduli_i for every row, or None.

    A modulus of 0 asks for equality over Z.
    """
    return _solve(a, rhs, moduli, ncols)[0]


def unsolvability_certificate(a, rhs, moduli, ncols: int | None = None) -> tuple[list[int], int] | None:
    """A pair (lam, c) proving the system unsolvable, or None if it is solvable.

    lam is an integer row vector and c >= 2 with lam.a = 0 mod c,
    lam_i * moduli_i = 0 mod c for every i, and lam.rhs != 0 mod c.
    """
    return _solve(a, rhs, moduli, ncols)[1]


def check_certificate(a, rhs, moduli, cert) -> bool:
    lam, c = cert
    if c < 2:
        return False
    m, n = _shape(a, None if not a else len(a[0]))
    for j in range(n):
        if sum(lam[i] * a[i][j] for i in range(m)) % c:
            return False
    if any((l * q) % c for l, q in zip(lam, moduli)):
        return False
    return sum(l * b for l, b in zip(lam, rhs)) % c != 0


def check_solution(a, rhs, moduli, v) -> bool:
    for row, b, q in zip(a, rhs, moduli):
        r = sum(x * y for x, y in zip(row, v)) - b
        if (r % q if q else r) != 0:
            return False
    return True


def basis_coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    """Coordinates of v in a Z-basis of a saturated-or-not sublattice; raises if v is outside."""
    n = len(v)
    mat = columns_to_matrix(basis, n)
    sol = solve_with_moduli(mat, list(v), [0] * n, ncols=len(basis))
    if sol is None:
        raise ValueError("vector is not in the span of the basis")
    return sol
