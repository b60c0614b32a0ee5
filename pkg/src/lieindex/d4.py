"""The minimal parabolic p = k X_{-alpha_2} + b of D4, which has no stable
linear form.

Every computational claim of the argument is checked for the forms
``f = phi_p(lambda X_{alpha_2} + u)``.  The step reducing an arbitrary
candidate to this family (through the open B-orbit in b*) is not computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import linalg
from .chevalley import LieAlgebra, add_el, build_algebra, scale
from .rootsystem import build_root_system, cascade, format_root, root_key
from .stability import cascade_element, is_stable
from .subalg import LinearForm, Subalgebra, borel, centralizer, form_from_element, index, parabolic

DEFAULT_LAMBDAS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(5), Fraction(-3, 7))

A2 = (0, 1, 0, 0)
NEG_A2 = (0, -1, 0, 0)
SUPPORT_ZERO = frozenset({NEG_A2, (1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1)})
SUPPORT_NONZERO = SUPPORT_ZERO | {(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 2, 1, 1)}
# h in the Cartan subalgebra: alpha_1(h) = alpha_3(h) = alpha_4(h) = 1, alpha_2(h) = -1
H_VALUES = (1, -1, 1, 1)

@lru_cache(maxsize=None)
def build_scenario() -> tuple[LieAlgebra, Subalgebra]:
    """D4 in Bourbaki numbering (alpha_2 is the branch node) and p."""
    L = build_algebra(build_root_system(("D", 4)))
    return L, parabolic(L, [1])


def counterexample_form(lam) -> LinearForm:
    L, p = build_scenario()
    v = add_el(scale(Fraction(lam), L.x(A2)), cascade_element(L))
    return form_from_element(p, v)


def grading_element(L: LieAlgebra) -> tuple:
    rs = L.rs
    # alpha_j(sum c_i H_i) = sum_i c_i <alpha_j, alpha_i^vee>
    A = [[rs.cartan[i][j] for i in range(rs.rank)] for j in range(rs.rank)]
    c = linalg.solve(A, H_VALUES)
    return tuple(c) + (Fraction(0),) * (L.dim - rs.rank)


@dataclass
class CounterexampleReport:
    lam: Fraction
    dim_pf: int
    support: list = field(default_factory=list)
    coefficients: dict = field(default_factory=dict)
    h_eigen_check: bool = False
    stability_verdict: bool = True
    dim_intersection: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "lambda": linalg.format_rational(self.lam),
            "dim_pf": self.dim_pf,
            "support": [list(a) for a in self.support],
            "coefficients": {k: linalg.format_rational(v) for k, v in self.coefficients.items()},
            "h_eigen_check": self.h_eigen_check,
            "stable": self.stability_verdict,
            "dim_intersection": self.dim_intersection,
            "failures": list(self.failures),
        }


def _check(lam) -> CounterexampleReport:
    lam = Fraction(lam)
    L, p = build_scenario()
    f = counterexample_form(lam)
    cent = centralizer(f)
    rep = CounterexampleReport(lam=lam, dim_pf=len(cent))
    if len(cent) != 1:
        rep.failures.append(f"dim p^f = {len(cent)}, expected 1 (lambda = {lam})")
        return rep
    x = cent[0]
    lead = x[L.root_index(NEG_A2)]
    if not lead:
        rep.failures.append(f"spanning x has no X_-alpha2 component (lambda = {lam})")
        return rep
    x = scale(1 / lead, x)
    if any(x[: L.rank]):
        rep.failures.append(f"spanning x has a Cartan component (lambda = {lam})")
    support = [a for a in L.rs.roots if x[L.root_index(a)]]
    rep.support = sorted(support, key=root_key)
    rep.coefficients = {format_root(a): x[L.root_index(a)] for a in rep.support}
    expected = SUPPORT_NONZERO if lam else SUPPORT_ZERO
    if set(support) != expected:
        missing = sorted(format_root(a) for a in expected - set(support))
        extra = sorted(format_root(a) for a in set(support) - expected)
        rep.failures.append(f"support mismatch (lambda = {lam}): missing {missing}, extra {extra}")
    h = grading_element(L)
    rep.h_eigen_check = L.bracket(h, x) == x
    if not rep.h_eigen_check:
        rep.failures.append(f"[h, x] != x (lambda = {lam})")
    report = is_stable(p, f, form_descr=f"phi_p({lam} X_a2 + u)")
    rep.stability_verdict = report.stable
    rep.dim_intersection = report.dim_intersection
    if report.stable or report.dim_intersection != 1:
        rep.failures.append(
            f"[p, p^f] ∩ p^f has dimension {report.dim_intersection}, expected 1 (lambda = {lam})"
        )
    return rep


def run_counterexample(lambdas: Iterable = DEFAULT_LAMBDAS) -> list[CounterexampleReport]:
    return [_check(lam) for lam in lambdas]


def scenario_facts(seed: int = 0, trials: int = 3) -> dict:
    """dim p, the cascade of D4 and the index of b."""
    L, p = build_scenario()
    return {
        "dim_p": p.dim,
        "cascade": [node.labels() for node in cascade(L.rs)],
        "index_b": index(borel(L), trials, seed),
    }


def scenario_failures(facts: dict) -> list[str]:
    out = []
    if facts["dim_p"] != 17:
        out.append(f"dim p = {facts['dim_p']}, expected 17")
    if sorted(facts["cascade"]) != [[1], [1, 2, 3, 4], [3], [4]]:
        out.append(f"cascade of D4 is {facts['cascade']}, expected Pi, {{1}}, {{3}}, {{4}}")
    if facts["index_b"] != 0:
        out.append(f"index of b is {facts['index_b']}, expected 0")
    return out
