"""Semisimple Lie algebras in a Chevalley basis, over the rationals.

Basis order: ``H_1 .. H_l`` (simple coroots), then ``X_alpha`` for the
positive roots in canonical order, then ``X_{-alpha}`` in the same order.
Elements are tuples of ``Fraction`` of length ``dim``.

Signs of the structure constants follow the extraspecial-pair convention:
``N_{alpha,beta} = +(p+1)`` on every extraspecial pair, every other
constant being forced by the Chevalley relations.  With this normalization
``[X_alpha, X_{-alpha}] = H_alpha`` and ``N_{-alpha,-beta} = -N_{alpha,beta}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Sequence

from .linalg import format_rational
from .rootsystem import RootSystem, add, format_root, neg, pairing, root_key, sub

Element = tuple  # tuple[Fraction, ...]


class LieAlgebraError(ValueError):
    pass


def _structure_constants(rs: RootSystem) -> dict[tuple, int]:
    """N_{a,b} for every ordered pair of roots with a + b a root."""
    pos = rs.positive_roots
    order = {a: i for i, a in enumerate(pos)}
    is_root = rs.is_root
    norm2 = {a: rs.norm2(a) for a in rs.roots}
    table: dict[tuple, int] = {}

    def string_below(beta, alpha) -> int:
        p = 0
        b = sub(beta, alpha)
        while is_root(b):
            p += 1
            b = sub(b, alpha)
        return p

    def N(a, b) -> int:
        s = add(a, b)
        if not any(s) or not is_root(s):
            return 0
        key = (a, b)
        if key in table:
            return table[key]
        pa = any(x > 0 for x in a)
        pb = any(x > 0 for x in b)
        if pa and pb:
            raise KeyError(key)  # positive pairs are filled in height order
        if not pa and not pb:
            v = -N(neg(a), neg(b))
        elif not pa:
            v = -N(b, a)
        else:
            c = neg(s)
            if any(x > 0 for x in c):
                # a, c positive: N_{a,b}/|c|^2 = N_{c,a}/|b|^2
                v = norm2[c] / norm2[b] * N(c, a)
            else:
                # b, c negative: N_{a,b}/|c|^2 = N_{b,c}/|a|^2
                v = norm2[c] / norm2[a] * N(b, c)
            v = Fraction(v)
            assert v.denominator == 1
            v = int(v)
        table[key] = v
        return v

    for xi in sorted(pos, key=root_key):
        pairs = [(a, sub(xi, a)) for a in pos if is_root(sub(xi, a)) and any(x > 0 for x in sub(xi, a))]
        pairs = [(a, b) for a, b in pairs if order[a] < order[b]]
        if not pairs:
            continue
        alpha, beta = min(pairs, key=lambda ab: order[ab[0]])
        n_ab = string_below(beta, alpha) + 1
        table[alpha, beta] = n_ab
        table[beta, alpha] = -n_ab
        for gamma, delta in pairs:
            if (gamma, delta) == (alpha, beta):
                continue
            t = Fraction(0)
            if is_root(sub(beta, gamma)):
                t += Fraction(N(beta, neg(gamma)) * N(alpha, neg(delta))) / norm2[sub(beta, gamma)]
            if is_root(sub(alpha, gamma)):
                t += Fraction(N(neg(gamma), alpha) * N(beta, neg(delta))) / norm2[sub(alpha, gamma)]
            v = norm2[xi] / n_ab * t
            assert v.denominator == 1
            table[gamma, delta] = int(v)
            table[delta, gamma] = -int(v)
    # complete the table for mixed and negative pairs
    for a in rs.roots:
        for b in rs.roots:
            N(a, b)
    return table


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    rs: RootSystem
    structure: dict  # (i, j) -> tuple of (k, int coefficient), only nonzero brackets

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def dim(self) -> int:
        return self.rs.rank + len(self.rs.roots)

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"H{i + 1}" for i in range(self.rank)) + tuple(
            f"X[{format_root(a)}]" for a in self.rs.roots
        )

    @cached_property
    def basis_weights(self) -> tuple:
        """Root of each basis element (zero for the Cartan generators)."""
        zero = (0,) * self.rank
        return (zero,) * self.rank + tuple(self.rs.roots)

    def root_index(self, alpha) -> int:
        try:
            return self.rank + self.rs.root_index[tuple(alpha)]
        except KeyError:
            raise LieAlgebraError(f"{tuple(alpha)} is not a root") from None

    def zero(self) -> Element:
        return (Fraction(0),) * self.dim

    def basis_element(self, i: int) -> Element:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def cartan(self, i: int) -> Element:
        return self.basis_element(i)

    def x(self, alpha) -> Element:
        return self.basis_element(self.root_index(alpha))

    def coroot(self, alpha) -> Element:
        """H_alpha written over the simple coroots."""
        v = [Fraction(0)] * self.dim
        for i, c in enumerate(self.rs.coroot_coords(alpha)):
            v[i] = Fraction(c)
        return tuple(v)

    def element(self, coords: Sequence) -> Element:
        if len(coords) != self.dim:
            raise LieAlgebraError(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(Fraction(c) for c in coords)

    def bracket(self, x: Sequence, y: Sequence) -> Element:
        if len(x) != self.dim or len(y) != self.dim:
            raise LieAlgebraError(f"dimension mismatch: {len(x)}, {len(y)} vs {self.dim}")
        out = [Fraction(0)] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        st = self.structure
        for i, a in xs:
            for j, b in ys:
                terms = st.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] += ab * c
        return tuple(out)

    def basis_bracket(self, i: int, j: int) -> dict[int, int]:
        return dict(self.structure.get((i, j), ()))

    def ad_matrix(self, x: Sequence) -> list[list[Fraction]]:
        """Matrix of ad x: column j holds the coordinates of [x, e_j]."""
        n = self.dim
        M = [[Fraction(0)] * n for _ in range(n)]
        st = self.structure
        for i, a in enumerate(x):
            if not a:
                continue
            for j in range(n):
                for k, c in st.get((i, j), ()):
                    M[k][j] += a * c
        return M

    @cached_property
    def killing_gram(self) -> dict[tuple[int, int], Fraction]:
        """Nonzero entries of the Killing form on basis pairs.

        ad e_i ad e_j moves weights by the sum of their weights, so its
        trace vanishes unless those weights cancel; only those pairs are
        traced.
        """
        n = self.dim
        w = self.basis_weights
        by_weight: dict[tuple, list[int]] = {}
        for i in range(n):
            by_weight.setdefault(w[i], []).append(i)
        st = self.structure
        gram = {}
        for i in range(n):
            for j in by_weight.get(neg(w[i]), ()):
                tr = 0
                for k in range(n):
                    for m, c in st.get((j, k), ()):
                        for kk, d in st.get((i, m), ()):
                            if kk == k:
                                tr += c * d
                if tr:
                    gram[i, j] = Fraction(tr)
        return gram

    def killing_form(self, x: Sequence, y: Sequence) -> Fraction:
        total = Fraction(0)
        g = self.killing_gram
        for (i, j), v in g.items():
            a, b = x[i], y[j]
            if a and b:
                total += a * b * v
        return total

    def bracket_table_json(self) -> list:
        """Bracket table as triples (i, j, [(k, "num/den")])."""
        return [
            [i, j, [[k, format_rational(c)] for k, c in terms]]
            for (i, j), terms in sorted(self.structure.items())
        ]


def build_algebra(rs: RootSystem) -> LieAlgebra:
    l = rs.rank
    N = _structure_constants(rs)
    roots = rs.roots
    idx = {a: l + i for i, a in enumerate(roots)}
    st: dict[tuple[int, int], tuple] = {}
    for i in range(l):
        for a in roots:
            c = pairing(rs, a, rs.simple_root(i))
            if c:
                st[i, idx[a]] = ((idx[a], c),)
                st[idx[a], i] = ((idx[a], -c),)
    for a in roots:
        ia = idx[a]
        h = rs.coroot_coords(a)
        st[ia, idx[neg(a)]] = tuple((i, c) for i, c in enumerate(h) if c)
        for b in roots:
            n = N.get((a, b), 0)
            if n:
                st[ia, idx[b]] = ((idx[add(a, b)], n),)
    return LieAlgebra(rs, st)


def bracket(L: LieAlgebra, x, y) -> Element:
    return L.bracket(x, y)


def ad_matrix(L: LieAlgebra, x) -> list[list[Fraction]]:
    return L.ad_matrix(x)


def killing_form(L: LieAlgebra, x, y) -> Fraction:
    return L.killing_form(x, y)


# -- elementwise helpers ------------------------------------------------------


def add_el(x: Sequence, y: Sequence) -> Element:
    return tuple(a + b for a, b in zip(x, y))


def scale(c, x: Sequence) -> Element:
    c = Fraction(c)
    return tuple(c * a for a in x)


def lin_comb(terms) -> Element:
    """sum of c * x over (c, x) pairs."""
    terms = list(terms)
    out = [Fraction(0)] * len(terms[0][1])
    for c, x in terms:
        if c:
            for i, a in enumerate(x):
                if a:
                    out[i] += c * a
    return tuple(out)


def is_zero(x: Sequence) -> bool:
    return not any(x)


# -- semisimplicity -----------------------------------------------------------


def minimal_polynomial(M: Sequence[Sequence]) -> list[Fraction]:
    """Monic minimal polynomial of a square rational matrix.

    Coefficients are returned lowest degree first.  The powers I, M, M^2,
    ... are flattened and reduced against each other until the first linear
    dependency appears.
    """
    n = len(M)
    if n == 0:
        return [Fraction(1)]
    den = 1
    for row in M:
        for a in row:
            a = Fraction(a)
            if a.denominator != 1:
                den = lcm(den, a.denominator)
    A = [[int(Fraction(a) * den) for a in row] for row in M]
    # minimal polynomial of A = den * M; rescale the roots at the end
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    # echelon store: list of (pivot, vector, combination) over Fractions
    basis: list[tuple[int, list[Fraction], list[Fraction]]] = []
    for k in range(n + 1):
        v = [Fraction(x) for row in P for x in row]
        comb = [Fraction(0)] * (k + 1)
        comb[k] = Fraction(1)
        for piv, bv, bc in basis:
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, bv)]
                for t in range(len(bc)):
                    comb[t] -= c * bc[t]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            coeffs = comb
            break
        c = v[piv]
        basis.append((piv, [x / c for x in v], [x / c for x in comb]))
        P = [[sum(P[i][t] * A[t][j] for t in range(n) if P[i][t] and A[t][j]) for j in range(n)] for i in range(n)]
    else:  # pragma: no cover - Cayley-Hamilton
        raise ArithmeticError("no dependency among the first n+1 powers")
    # coeffs: sum c_k A^k = 0 with c_deg = 1; undo the scaling A = den*M
    deg = len(coeffs) - 1
    return [coeffs[k] * Fraction(den) ** k / Fraction(den) ** deg for k in range(deg + 1)]


def _poly_gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    def trim(r):
        while r and not r[-1]:
            r.pop()
        return r

    p, q = trim(list(p)), trim(list(q))
    while q:
        r = list(p)
        while len(r) >= len(q) and r:
            c = r[-1] / q[-1]
            shift = len(r) - len(q)
            for i, a in enumerate(q):
                r[shift + i] -= c * a
            trim(r)
        p, q = q, r
    return [a / p[-1] for a in p]


def is_squarefree(poly: Sequence[Fraction]) -> bool:
    deriv = [k * c for k, c in enumerate(poly)][1:]
    return len(_poly_gcd(list(poly), deriv)) == 1


def is_semisimple_element(L: LieAlgebra, x: Sequence) -> bool:
    """ad x is diagonalizable over the algebraic closure iff its minimal
    polynomial is squarefree."""
    return is_squarefree(minimal_polynomial(L.ad_matrix(x)))


def trace(M: Sequence[Sequence]) -> Fraction:
    return sum((Fraction(M[i][i]) for i in range(len(M))), Fraction(0))
