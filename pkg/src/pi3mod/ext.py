"""Classification of Gamma(pi_2) >-> pi_3 ->> H_3 as an extension of pi_1-modules.

Choose the additive splitting u'(b_i) = (b_i, 0) in linear coordinates; its
action defect B' lies in Hom(H_3, Gamma(pi_2)) = Gamma(pi_2)^r.  Another
additive splitting u' + t has defect B' + beta(t) with
beta(t)(l) = t(l)^1 - t(l^1), so the sequence splits over pi_1 exactly when
B' lies in the image of beta, and the class of B' in coker(beta) is the
extension invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from ._kernels import search_split
from .gamma import GammaPi2, bracket_expand, gamma_expand, gamma_act, GammaElement, _pairs
from .pi3 import H3, Pi3Presentation, assemble_pi3, special_x
from .zmod import (
    AbMorphism, Quotient, basis_coordinates, check_certificate, check_solution, matvec,
    solve_with_moduli, unsolvability_certificate,
)


def linearize_splitting(p: Pi3Presentation) -> list[tuple[int, ...]]:
    """B'(b_i) for the additive splitting u'(b_i) = (b_i, 0)."""
    return list(p.B_linear)


def hom_moduli(p_or_h3, G: GammaPi2 | None = None) -> list[int]:
    if isinstance(p_or_h3, Pi3Presentation):
        h3, G = p_or_h3.H3, p_or_h3.gamma
    else:
        h3 = p_or_h3
    return list(G.group.moduli) * h3.rank


def beta_matrix(h3: H3, G: GammaPi2) -> list[list[int]]:
    """Integer matrix of beta on Gamma(pi_2)^r (block i collects t(b_i))."""
    r, n = h3.rank, G.group.ngens
    T_G = G.action.as_lists()
    T_H = h3.action_matrix
    M = [[0] * (r * n) for _ in range(r * n)]
    for i in range(r):
        for j in range(r):
            for s in range(n):
                for u in range(n):
                    v = (T_G[s][u] if i == j else 0) - (T_H[j][i] if s == u else 0)
                    M[i * n + s][j * n + u] = v
    return M


def _hom_quotient(h3: H3, G: GammaPi2, extra: Sequence[Sequence[int]] = ()) -> Quotient:
    mods = hom_moduli(h3, G)
    m = len(mods)
    rels = [[d if k == s else 0 for k in range(m)] for s, d in enumerate(mods) if d]
    return Quotient(m, rels + [list(c) for c in extra])


def beta_endomorphism(h3: H3, G: GammaPi2) -> AbMorphism:
    """beta as an endomorphism of the canonical form of Hom(H_3, Gamma(pi_2))."""
    return _hom_quotient(h3, G).induced(beta_matrix(h3, G))


def coker_beta(h3: H3, G: GammaPi2) -> Quotient:
    M = beta_matrix(h3, G)
    cols = [[row[j] for row in M] for j in range(len(M))]
    return _hom_quotient(h3, G, cols)


@dataclass
class ExtVerdict:
    split: bool
    class_order: int
    class_coords: tuple[int, ...]
    coker: object
    certificate: dict
    B_linear: list[tuple[int, ...]]

    def as_dict(self) -> dict:
        return {
            "split": self.split,
            "class_order": self.class_order,
            "coker_beta": {"torsion": list(self.coker.torsion), "rank": self.coker.rank},
            "class": list(self.class_coords),
            "certificate": self.certificate,
            "B_linear": [list(b) for b in self.B_linear],
        }


def _flat(rows) -> list[int]:
    return [v for r in rows for v in r]


def tau_class(p: Pi3Presentation) -> ExtVerdict:
    """Reduce B' modulo the image of beta and decide splitness."""
    h3, G = p.H3, p.gamma
    bl = linearize_splitting(p)
    target = _flat(bl)
    M = beta_matrix(h3, G)
    mods = hom_moduli(h3, G)
    ck = coker_beta(h3, G)
    cls = ck.reduce(target)
    order = ck.group.element_order(cls)
    split = not any(cls)
    if split:
        s = solve_with_moduli(M, target, mods, ncols=len(mods))
        assert s is not None
        t = [-v for v in s]
        n = G.group.ngens
        t = [list(G.group.canonical(t[i * n:(i + 1) * n])) for i in range(h3.rank)]
        cert = {"kind": "splitting", "t": t}
    else:
        lam, c = unsolvability_certificate(M, target, mods, ncols=len(mods))
        cert = {"kind": "obstruction", "lambda": lam, "modulus": c}
    return ExtVerdict(split, 1 if split else order, cls, ck.group, cert, bl)


def verify_verdict(p: Pi3Presentation, v: ExtVerdict) -> bool:
    """Re-check the certificate of a verdict from scratch."""
    h3, G = p.H3, p.gamma
    M = beta_matrix(h3, G)
    mods = hom_moduli(h3, G)
    target = _flat(linearize_splitting(p))
    if v.split:
        t = _flat(v.certificate["t"])
        res = [a + b for a, b in zip(target, matvec(M, t))]
        return all((r % d if d else r) == 0 for r, d in zip(res, mods))
    cert = (v.certificate["lambda"], v.certificate["modulus"])
    return check_certificate(M, target, mods, cert)


# -- the explicit congruence system for x = xtilde k_1 --------------------------


@dataclass
class CongruenceSystem:
    f: int
    xtilde: int
    unknowns: list[str]
    row_labels: list[str]
    matrix: list[list[int]]
    rhs: list[int]
    moduli: list[int]
    solution: list[int] | None
    certificate: tuple[list[int], int] | None

    @property
    def solvable(self) -> bool:
        return self.solution is not None


def _unknown_index(f: int):
    names, idx = [], {}
    for k in range(1, f):
        idx[("g", k)] = len(names)
        names.append(f"l_{k}")
    for k in range(2, f):
        for j in range(1, k):
            idx[("b", j, k)] = len(names)
            names.append(f"l_{j},{k}")
    return names, idx


def congruence_system(f: int, xtilde: int) -> CongruenceSystem:
    """Solvability of l^1 - l = B'(N) in the alpha basis alpha_k = [k] - [k-1].

    Rows: (A) the gamma(alpha_1) coefficient, (B_k) gamma(alpha_k),
    (C_k) [alpha_1, alpha_k] and (D_{j,k}) [alpha_j, alpha_k] for
    2 <= j < k <= f-1.  gamma rows are taken modulo gcd(xtilde, 2) xtilde,
    the order of gamma on Z/xtilde, and bracket rows modulo xtilde.
    """
    if f < 2:
        raise ValueError("f must be at least 2")
    if xtilde == 0:
        raise ValueError("xtilde must be nonzero")
    xt = abs(xtilde)
    g = gcd(xt, 2) * xt
    names, idx = _unknown_index(f)
    n = len(names)
    rows, rhs, mods, labels = [], [], [], []

    def row(coeffs, b, m, label):
        r = [0] * n
        for key, c in coeffs:
            r[idx[key]] += c
        rows.append(r)
        rhs.append(b)
        mods.append(m)
        labels.append(label)

    top = ("g", f - 1)
    row([(top, 1), (("g", 1), -1)], xt, g, "A")
    for k in range(2, f):
        coeffs = [(("g", k - 1), 1), (("g", k), -1), (top, 1)]
        if k - 1 < f - 1:
            coeffs.append((("b", k - 1, f - 1), -2))
        row(coeffs, 0, g, f"B_{k}")
    for k in range(2, f):
        coeffs = [(top, 1), (("b", 1, k), -1)]
        if k - 1 >= 1 and k - 1 < f - 1:
            coeffs.append((("b", k - 1, f - 1), -1))
        row(coeffs, 0, xt, f"C_{k}")
    for k in range(3, f):
        for j in range(2, k):
            coeffs = [(top, 1), (("b", j - 1, k - 1), 1), (("b", j, k), -1),
                      (("b", j - 1, f - 1), -1), (("b", k - 1, f - 1), -1)]
            row(coeffs, 0, xt, f"D_{j},{k}")
    sol = solve_with_moduli(rows, rhs, mods, ncols=n)
    cert = None if sol is not None else unsolvability_certificate(rows, rhs, mods, ncols=n)
    return CongruenceSystem(f, xtilde, names, labels, rows, rhs, mods, sol, cert)


def odd_f_witness(f: int, xtilde: int) -> list[int]:
    """The explicit solution for odd f: l_k = xtilde for even k, all other unknowns 0."""
    names, idx = _unknown_index(f)
    v = [0] * len(names)
    for k in range(2, f, 2):
        v[idx[("g", k)]] = abs(xtilde)
    return v


def check_congruence_solution(sys: CongruenceSystem, v: Sequence[int]) -> bool:
    return check_solution(sys.matrix, sys.rhs, sys.moduli, v)


def alpha_difference_matrix(f: int) -> list[list[int]]:
    """Integer matrix of l -> l^1 - l on Gamma(K) in the alpha-basis coordinates.

    Columns and rows are ordered like the unknowns of the congruence system:
    gamma(alpha_k) for k = 1..f-1, then [alpha_j, alpha_k] with k ascending
    and j ascending below it.
    """
    names, idx = _unknown_index(f)
    n = f - 1
    alpha = [[(1 if r == k else 0) - (1 if r == k - 1 else 0) for r in range(n)] for k in range(n)]
    basis = []
    for name in names:
        parts = name[2:].split(",")
        if len(parts) == 1:
            basis.append(gamma_expand(alpha[int(parts[0]) - 1], f))
        else:
            j, k = int(parts[0]), int(parts[1])
            basis.append(bracket_expand(alpha[j - 1], alpha[k - 1], f))
    cols = []
    for e in basis:
        d = gamma_act(e, 1) - e
        cols.append(basis_coordinates([b.coords for b in basis], d.coords))
    return [[cols[c][r] for c in range(len(names))] for r in range(len(names))]


# -- independent oracles -------------------------------------------------------


class EnumerationTooLarge(RuntimeError):
    pass


ENUMERATION_LIMIT = 10**6


def enumeration_size(p: Pi3Presentation) -> int | None:
    mods = hom_moduli(p)
    if any(d == 0 for d in mods):
        return None
    return prod(mods)


def brute_force_split_oracle(p: Pi3Presentation, limit: int = ENUMERATION_LIMIT, use_numba: bool | None = None) -> bool:
    """Try every t in Hom(H_3, Gamma(pi_2)); True if some B' + beta(t) vanishes."""
    size = enumeration_size(p)
    if size is None:
        raise EnumerationTooLarge("Gamma(pi_2) is infinite")
    if size > limit:
        raise EnumerationTooLarge(f"{size} candidates exceed the limit {limit}")
    found, _ = search_split(beta_matrix(p.H3, p.gamma), _flat(linearize_splitting(p)), hom_moduli(p), use_numba)
    return found


def _valuation(a: int, p: int) -> int:
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _solvable_mod_prime_power(rows, rhs, p: int, K: int) -> bool:
    """Solvability of rows . s = rhs over Z/p^K by elimination with minimal-valuation pivots."""
    mod = p ** K
    A = [[v % mod for v in r] for r in rows]
    b = [v % mod for v in rhs]
    m = len(A)
    n = len(A[0]) if A else 0
    used_rows, used_cols = set(), set()
    while True:
        best = None
        for i in range(m):
            if i in used_rows:
                continue
            for j in range(n):
                if j in used_cols or not A[i][j]:
                    continue
                v = _valuation(A[i][j], p)
                if best is None or v < best[0]:
                    best = (v, i, j)
        if best is None:
            break
        v, i, j = best
        used_rows.add(i)
        used_cols.add(j)
        unit = A[i][j] // p ** v
        inv = pow(unit, -1, mod)
        A[i] = [(a * inv) % mod for a in A[i]]
        b[i] = (b[i] * inv) % mod
        # A[i][j] is now p^v; clear column j (rows) and row i (columns)
        for r in range(m):
            if r != i and A[r][j]:
                q = A[r][j] // p ** v
                A[r] = [(a - q * c) % mod for a, c in zip(A[r], A[i])]
                b[r] = (b[r] - q * b[i]) % mod
        pv = p ** v
        for c in range(n):
            if c != j and A[i][c]:
                q = A[i][c] // pv
                for r in range(m):
                    A[r][c] = (A[r][c] - q * A[r][j]) % mod
        if b[i] % pv:
            return False
    return all(b[i] == 0 for i in range(m) if i not in used_rows)


def local_split_oracle(p: Pi3Presentation) -> bool:
    """Decide solvability of beta(s) = B' prime by prime over Z/p^K."""
    mods = hom_moduli(p)
    if any(d == 0 for d in mods):
        raise EnumerationTooLarge("Gamma(pi_2) is infinite")
    M = beta_matrix(p.H3, p.gamma)
    target = _flat(linearize_splitting(p))
    for q in _prime_factors(prod(mods)) if mods else []:
        exps = [_valuation(d, q) for d in mods]
        K = max(exps)
        if K == 0:
            continue
        rows, rhs = [], []
        for r, b, e in zip(M, target, exps):
            if e:
                scale = q ** (K - e)
                rows.append([scale * a for a in r])
                rhs.append(scale * b)
        if not _solvable_mod_prime_power(rows, rhs, q, K):
            return False
    return True


def split_oracle(p: Pi3Presentation, limit: int = ENUMERATION_LIMIT) -> tuple[bool, str]:
    """Enumerate when feasible, otherwise fall back to prime-power elimination."""
    try:
        return brute_force_split_oracle(p, limit), "enumeration"
    except EnumerationTooLarge:
        return local_split_oracle(p), "p-local"


def expected_split(f: int, xtilde: int) -> bool:
    return xtilde % 2 == 1 or f % 2 == 1


def classify_special(f: int, xtilde: int) -> ExtVerdict:
    return tau_class(assemble_pi3(f, special_x(f, xtilde)))
