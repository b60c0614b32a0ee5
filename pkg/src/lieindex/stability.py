"""Stability of linear forms on ad-algebraic subalgebras.

A form ``f`` on ``a`` is stable for the adjoint group of ``a`` exactly when
``[a, a^f]`` meets ``a^f`` only in zero.  This module evaluates that
criterion with exact linear algebra and builds the cascade form
``phi_b(u)``, ``u = sum_K X_{-eps_K}``, which is stable on every Borel
subalgebra and realizes the index ``rank - k_g``.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Sequence

from . import linalg
from .chevalley import Element, LieAlgebra, is_semisimple_element, lin_comb
from .rootsystem import cascade, k_g, neg, pairing
from .subalg import (
    LinearForm,
    Subalgebra,
    SubalgebraError,
    borel,
    centralizer,
    centralizer_dim,
    form_from_element,
    index,
)

log = logging.getLogger(__name__)


@dataclass
class StabilityReport:
    subalgebra_descr: str
    form_descr: str
    dim_centralizer: int
    dim_bracket_space: int
    dim_intersection: int
    stable: bool
    warnings: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.stable:
            return f"stable: [a, a^f] ∩ a^f = 0 (dim a^f = {self.dim_centralizer})"
        return f"not stable: [a, a^f] ∩ a^f has dimension {self.dim_intersection}"

    def to_json(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def cascade_element(L: LieAlgebra) -> Element:
    """u = sum of X_{-eps_K} over the cascade of the full diagram."""
    return lin_comb((1, L.x(neg(node.epsilon))) for node in cascade(L.rs))


def cascade_form(L: LieAlgebra, b: Subalgebra | None = None) -> LinearForm:
    return form_from_element(b if b is not None else borel(L), cascade_element(L))


def bracket_space(a: Subalgebra, W: Sequence[Sequence]) -> list[Element]:
    """Echelon basis of span{[b, w] : b in basis(a), w in W}."""
    for w in W:
        if not a.contains(w):
            raise SubalgebraError("W is not contained in the subalgebra")
    L = a.ambient
    vecs = [L.bracket(b, w) for b in a.basis for w in W if any(w)]
    return linalg.echelon_basis([v for v in vecs if any(v)])


def subspace_intersection(U: Sequence[Sequence], V: Sequence[Sequence]) -> list[Element]:
    return linalg.intersection(U, V)


def is_stable(a: Subalgebra, f: LinearForm, form_descr: str = "f") -> StabilityReport:
    if not (f.on is a or (f.on.ambient is a.ambient and f.on.basis == a.basis)):
        raise SubalgebraError("the form is not defined on this subalgebra")
    warnings = []
    if not a.is_algebraic:
        warnings.append(
            f"{a.descr or 'subalgebra'} is not a known ad-algebraic subalgebra; "
            "the criterion is only known to characterize stability in that case"
        )
        log.warning(warnings[-1])
    cent = centralizer(f)
    br = bracket_space(a, cent)
    inter = subspace_intersection(br, cent)
    return StabilityReport(
        subalgebra_descr=a.descr,
        form_descr=form_descr,
        dim_centralizer=len(cent),
        dim_bracket_space=len(br),
        dim_intersection=len(inter),
        stable=not inter,
        warnings=warnings,
    )


def _in_cartan(L: LieAlgebra, x: Sequence) -> bool:
    return not any(x[L.rank :])


def check_semisimple_commutative_centralizer(a: Subalgebra, f: LinearForm) -> bool:
    """a^f is abelian and consists of semisimple elements.

    A commuting family of semisimple elements spans a space of semisimple
    elements, so it suffices to test a basis; members of the Cartan
    subalgebra are semisimple without further work.
    """
    L = a.ambient
    cent = centralizer(f)
    for i, x in enumerate(cent):
        for y in cent[i + 1 :]:
            if any(L.bracket(x, y)):
                return False
    return all(_in_cartan(L, x) or is_semisimple_element(L, x) for x in cent)


def borel_centralizer_spaces(L: LieAlgebra) -> tuple[list[Element], list[Element]]:
    """The two sides of the characterization of b^f for the cascade form.

    Returns echelon bases of {x in b : [x, u] in n} and of
    {x in h : eps_K(x) = 0 for every K}.
    """
    u = cascade_element(L)
    b = borel(L)
    npos = len(L.rs.positive_roots)
    outside_n = list(range(L.rank)) + list(range(L.rank + npos, L.dim))
    images = [L.bracket(x, u) for x in b.basis]
    system = [[img[r] for img in images] for r in outside_n]
    lhs = linalg.echelon_basis([b.element(k) for k in linalg.nullspace(system, b.dim)])

    rs = L.rs
    eps = [node.epsilon for node in cascade(rs)]
    # eps(H_i) = <eps, alpha_i^vee>
    cond = [[pairing(rs, e, rs.simple_root(i)) for i in range(L.rank)] for e in eps]
    h_kernel = linalg.nullspace(cond, L.rank)
    rhs = linalg.echelon_basis([tuple(k) + (0,) * (L.dim - L.rank) for k in h_kernel])
    return lhs, rhs


def verify_borel_centralizer_equivalence(L: LieAlgebra) -> bool:
    lhs, rhs = borel_centralizer_spaces(L)
    return lhs == rhs


@dataclass
class IndexCertificate:
    stype: str
    dim_borel: int
    expected: int  # rank - k_g
    sampled_index: int
    cascade_centralizer_dim: int
    trials: int
    seed: int

    @property
    def ok(self) -> bool:
        return self.sampled_index == self.expected == self.cascade_centralizer_dim


def index_certificate(L: LieAlgebra, seed: int = 0, trials: int = 3) -> IndexCertificate:
    b = borel(L)
    return IndexCertificate(
        stype=str(L.rs.stype),
        dim_borel=b.dim,
        expected=L.rank - k_g(L.rs),
        sampled_index=index(b, trials, seed),
        cascade_centralizer_dim=centralizer_dim(cascade_form(L, b)),
        trials=trials,
        seed=seed,
    )


def verify_index_formula(L: LieAlgebra, seed: int = 0, trials: int = 3) -> bool:
    """index(b) == rank - k_g, by sampling and by the cascade form."""
    return index_certificate(L, seed, trials).ok
