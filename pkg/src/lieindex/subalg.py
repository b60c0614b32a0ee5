"""Subalgebras, linear forms on them, and the index.

For ``f`` in the dual of a subalgebra ``a`` the alternating form
``Phi_f(x, y) = f([x, y])`` has kernel ``a^f``, the stabilizer of ``f``
under the coadjoint action.  The index of ``a`` is the smallest possible
``dim a^f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from . import linalg
from .chevalley import Element, LieAlgebra, lin_comb
from .rootsystem import positive_roots_of

# ad-algebraic subalgebras we know how to build
ALGEBRAIC_KINDS = ("full", "borel", "parabolic", "nilradical")

SAMPLE_BOUND = 2**31


class SubalgebraError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Subalgebra:
    """Subspace of ``ambient`` closed under the bracket.

    ``basis`` is in reduced row echelon form, ``pivots`` are its pivot
    columns; coordinates of a member are read off at the pivots.
    """

    ambient: LieAlgebra
    basis: tuple
    pivots: tuple
    kind: Optional[str] = None
    descr: str = ""
    parabolic_subset: tuple = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: Sequence) -> tuple[Fraction, ...]:
        try:
            return linalg.coordinates(self.basis, self.pivots, x)
        except ValueError:
            raise SubalgebraError("element does not lie in the subalgebra") from None

    def contains(self, x: Sequence) -> bool:
        try:
            self.coords(x)
        except SubalgebraError:
            return False
        return True

    def element(self, coords: Sequence) -> Element:
        """Ambient element with the given coordinates in ``basis``."""
        return lin_comb(zip(coords, self.basis)) if self.basis else self.ambient.zero()

    @cached_property
    def structure(self) -> dict[tuple[int, int], tuple]:
        """c_ij^k with [b_i, b_j] = sum_k c_ij^k b_k, nonzero pairs i < j."""
        L = self.ambient
        st = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                br = L.bracket(self.basis[i], self.basis[j])
                if any(br):
                    c = self.coords(br)
                    st[i, j] = tuple((k, int(v) if v.denominator == 1 else v) for k, v in enumerate(c) if v)
        return st

    @property
    def is_algebraic(self) -> bool:
        return self.kind in ALGEBRAIC_KINDS

    def to_json(self) -> dict:
        rs = self.ambient.rs
        return {
            "type": rs.family,
            "rank": rs.rank,
            "kind": self.kind,
            "parabolic_subset": [i + 1 for i in self.parabolic_subset],
        }


def subalgebra(L: LieAlgebra, vectors: Iterable[Sequence], kind=None, descr="", check=True) -> Subalgebra:
    """Subalgebra spanned by ``vectors`` (which must already be closed)."""
    rows, pivots = linalg.rref([tuple(v) for v in vectors]) if vectors else ([], [])
    a = Subalgebra(L, tuple(rows), tuple(pivots), kind, descr)
    if check:
        for i in range(a.dim):
            for j in range(i + 1, a.dim):
                if not a.contains(L.bracket(a.basis[i], a.basis[j])):
                    raise SubalgebraError(f"span is not closed under the bracket ({descr or 'subspace'})")
    return a


def _unit_subalgebra(L: LieAlgebra, indices: Sequence[int], kind, descr, subset=()) -> Subalgebra:
    idx = sorted(indices)
    basis = tuple(L.basis_element(i) for i in idx)
    return Subalgebra(L, basis, tuple(idx), kind, descr, tuple(sorted(subset)))


def full(L: LieAlgebra) -> Subalgebra:
    return _unit_subalgebra(L, range(L.dim), "full", f"g({L.rs.stype})", range(L.rank))


def borel(L: LieAlgebra) -> Subalgebra:
    """h + n: Cartan generators, then positive root vectors."""
    npos = len(L.rs.positive_roots)
    return _unit_subalgebra(L, range(L.rank + npos), "borel", f"b({L.rs.stype})")


def nilradical(L: LieAlgebra) -> Subalgebra:
    npos = len(L.rs.positive_roots)
    return _unit_subalgebra(L, range(L.rank, L.rank + npos), "nilradical", f"n({L.rs.stype})")


def cartan_subalgebra(L: LieAlgebra) -> Subalgebra:
    return _unit_subalgebra(L, range(L.rank), "cartan", f"h({L.rs.stype})")


def parabolic(L: LieAlgebra, S: Iterable[int]) -> Subalgebra:
    """Borel plus X_{-alpha} for alpha in R_+^S (S is 0-based)."""
    S = sorted(set(S))
    if any(not 0 <= i < L.rank for i in S):
        raise SubalgebraError(f"parabolic subset {[i + 1 for i in S]} outside 1..{L.rank}")
    npos = len(L.rs.positive_roots)
    idx = list(range(L.rank + npos))
    idx += [L.root_index(tuple(-c for c in a)) for a in positive_roots_of(L.rs, S)]
    labels = ",".join(str(i + 1) for i in S)
    return _unit_subalgebra(L, idx, "parabolic", f"p({L.rs.stype}; {{{labels}}})", S)


@dataclass(frozen=True, eq=False)
class LinearForm:
    on: Subalgebra
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.on.dim:
            raise SubalgebraError(f"form has {len(self.coords)} coordinates, subalgebra has dimension {self.on.dim}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __call__(self, x: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.coords, self.on.coords(x)) if a and b), Fraction(0))

    def scaled(self, c) -> "LinearForm":
        c = Fraction(c)
        return LinearForm(self.on, tuple(c * a for a in self.coords))

    def to_json(self) -> list[str]:
        return [linalg.format_rational(a) for a in self.coords]


def form_from_json(a: Subalgebra, data: Sequence) -> LinearForm:
    return LinearForm(a, tuple(linalg.parse_rational(x) for x in data))


def form_from_element(a: Subalgebra, y: Sequence) -> LinearForm:
    """x -> L(y, x) restricted to ``a``, with L the Killing form."""
    L = a.ambient
    return LinearForm(a, tuple(L.killing_form(y, b) for b in a.basis))


@dataclass(frozen=True, eq=False)
class KirillovMatrix:
    form: LinearForm
    M: tuple  # rows of Fractions

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.M)


def _kirillov_rows(a: Subalgebra, coords: Sequence) -> list[list]:
    n = a.dim
    M = [[0] * n for _ in range(n)]
    for (i, j), terms in a.structure.items():
        v = sum(c * coords[k] for k, c in terms if coords[k])
        if v:
            M[i][j] = v
            M[j][i] = -v
    return M


def kirillov_matrix(f: LinearForm) -> KirillovMatrix:
    rows = _kirillov_rows(f.on, f.coords)
    return KirillovMatrix(f, tuple(tuple(Fraction(x) for x in r) for r in rows))


def centralizer(f: LinearForm) -> list[Element]:
    """a^f as ambient elements (canonical basis of the kernel of Phi_f)."""
    a = f.on
    if a.dim == 0:
        return []
    rows = _kirillov_rows(a, f.coords)
    kernel = linalg.nullspace(rows, a.dim)
    return [a.element(k) for k in kernel]


def random_form(a: Subalgebra, rng: np.random.Generator) -> LinearForm:
    c = rng.integers(-SAMPLE_BOUND, SAMPLE_BOUND, size=a.dim, endpoint=True)
    return LinearForm(a, tuple(int(x) for x in c))


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def index(a: Subalgebra, trials: int = 3, seed: int = 0) -> int:
    """dim a minus the largest rank of Phi_f over ``trials`` random forms.

    Each trial draws integer coordinates uniformly in [-2^31, 2^31] from a
    generator seeded by (seed, trial).  A random form is regular except on
    a proper hypersurface, so the estimate fails with probability at most
    dim/2^31 per trial, and only ever on the high side.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    best = 0
    for t in range(trials):
        f = random_form(a, trial_rng(seed, t))
        best = max(best, linalg.rank(_kirillov_rows(a, f.coords)))
        if best == a.dim - a.dim % 2:  # Phi_f has even rank
            break
    return a.dim - best


def centralizer_dim(f: LinearForm) -> int:
    return f.on.dim - linalg.rank(_kirillov_rows(f.on, f.coords))


def is_regular(f: LinearForm, index_of_a: int) -> bool:
    return centralizer_dim(f) == index_of_a
