"""Exact linear algebra over the rationals.

Vectors are sequences of ``int`` or ``Fraction``; matrices are sequences of
rows.  Nothing here ever touches a float.  Elimination is done on integer
rows (denominators cleared first) so intermediate values stay in ``int``,
which is considerably faster than ``Fraction`` arithmetic in CPython.  When
gmpy2 is importable its ``mpz`` backs the integer rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

try:
    from gmpy2 import gcd, mpz as _big
except ImportError:  # pragma: no cover
    from math import gcd

    _big = int

def _integer_row(row: Sequence) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [_big(int(x)) for x in row]
    return [_big(int(x * den)) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by fraction-free (Bareiss) elimination."""
    rows = [_integer_row(r) for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        tail = range(c + 1, ncols)
        for i in range(r + 1, len(rows)):
            row = rows[i]
            a = row[c]
            if a:
                for j in tail:
                    row[j] = (row[j] * p - prow[j] * a) // prev
            else:
                for j in tail:
                    if row[j]:
                        row[j] = (row[j] * p) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def rref(matrix: Sequence[Sequence]) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Reduced row echelon form.

    Returns the nonzero rows (pivot entries equal to 1) and the pivot
    columns.  Zero rows are dropped.
    """
    rows = [_primitive(_integer_row(r)) for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        best = None
        for i in range(r, len(rows)):
            v = rows[i][c]
            # smallest pivot keeps the integer rows short
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
                if best == 1:
                    break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        nz = [j for j in range(ncols) if prow[j]]
        for i in range(len(rows)):
            if i == r:
                continue
            row = rows[i]
            a = row[c]
            if not a:
                continue
            g = gcd(a, p)
            mp, ma = p // g, a // g
            if mp != 1:
                row = [x * mp for x in row]
            for j in nz:
                row[j] -= ma * prow[j]
            rows[i] = _primitive(row)
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    out = []
    for i, c in enumerate(pivots):
        p = int(rows[i][c])
        out.append(tuple(Fraction(int(x), p) for x in rows[i]))
    return out, pivots


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {v : M v = 0}, one vector per free column.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns, so the basis is canonical for the row space of ``matrix``.
    """
    if ncols is None:
        if not matrix:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(matrix[0])
    rows, pivots = rref(matrix) if matrix else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, c in zip(rows, pivots):
            v[c] = -row[free]
        basis.append(tuple(v))
    return basis


def echelon_basis(vectors: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Canonical (RREF) basis of the span of ``vectors``."""
    vectors = list(vectors)
    if not vectors:
        return []
    return rref(vectors)[0]


def span_rank(vectors: Sequence[Sequence]) -> int:
    return rank(vectors) if vectors else 0


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [v]) == rank(basis)


def coordinates(basis: Sequence[Sequence], pivots: Sequence[int], v: Sequence) -> tuple[Fraction, ...]:
    """Coordinates of ``v`` in an RREF ``basis`` with the given pivots.

    Raises ``ValueError`` if ``v`` is not in the span.
    """
    coeffs = tuple(Fraction(v[c]) for c in pivots)
    residual = [Fraction(x) for x in v]
    for a, row in zip(coeffs, basis):
        if a:
            for j, b in enumerate(row):
                if b:
                    residual[j] -= a * b
    if any(residual):
        raise ValueError("vector is not in the span of the basis")
    return coeffs


def intersection(U: Sequence[Sequence], V: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Basis of span(U) ∩ span(V).

    Solves sum a_i u_i = sum b_j v_j through the kernel of [U^T | -V^T] and
    maps the ``a`` part back.
    """
    U = [list(u) for u in U if any(u)]
    V = [list(v) for v in V if any(v)]
    if not U or not V:
        return []
    n = len(U[0])
    cols = U + [[-x for x in v] for v in V]
    system = [[col[k] for col in cols] for k in range(n)]
    kernel = nullspace(system, len(cols))
    vecs = []
    for k in kernel:
        w = [Fraction(0)] * n
        for a, u in zip(k[: len(U)], U):
            if a:
                for j, x in enumerate(u):
                    if x:
                        w[j] += a * x
        vecs.append(w)
    return echelon_basis(vecs)


def mat_vec(matrix: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v) if a and b) for row in matrix]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col) if a and b) for col in Bt] for row in A]


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*A)]


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a number into a Fraction."""
    return Fraction(text)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def solve(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...]:
    """One solution of A x = b; raises ``ValueError`` if there is none."""
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for row, c in zip(rows, pivots):
        x[c] = row[ncols]
    return tuple(x)
