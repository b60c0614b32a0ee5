"""Structural checks shared by ``verify-all`` and the test-suite.

Each ``check_*`` returns a list of failure messages; an empty list means
the property held on everything that was examined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .chevalley import LieAlgebra, build_algebra
from .rootsystem import (
    RootSystem,
    SimpleType,
    add,
    build_root_system,
    cascade,
    highest_root,
    k_g,
    pairing,
    positive_roots_of,
    roots_of,
    sub,
    supported_types,
    table_k_g,
)
from .subalg import _kirillov_rows, full, index


def random_element(L: LieAlgebra, rng: np.random.Generator, bound: int = 5, density: float = 1.0) -> tuple:
    vals = rng.integers(-bound, bound, size=L.dim, endpoint=True)
    dens = rng.random(L.dim) if density < 1.0 else np.zeros(L.dim)
    den = rng.integers(1, 4, size=L.dim)
    return tuple(
        Fraction(int(v), int(d)) if p < density else Fraction(0) for v, d, p in zip(vals, den, dens)
    )


def _sparse_bracket(L: LieAlgebra, x: dict, y: dict) -> dict:
    """Bracket of elements stored as {basis index: coefficient}."""
    out: dict = {}
    st = L.structure
    for i, a in x.items():
        for j, b in y.items():
            for k, c in st.get((i, j), ()):
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def _sparse_add(*xs: dict) -> dict:
    out: dict = {}
    for x in xs:
        for k, v in x.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _jacobi_fails(L: LieAlgebra, i: int, j: int, k: int) -> bool:
    ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
    br = lambda x, y: _sparse_bracket(L, x, y)
    return bool(_sparse_add(br(br(ei, ej), ek), br(br(ej, ek), ei), br(br(ek, ei), ej)))


def check_jacobi(L: LieAlgebra, samples: int | None = None, seed: int = 0) -> list[str]:
    """Jacobi on basis triples: all of them, or ``samples`` random ones."""
    n = L.dim
    if samples is None:
        triples: Iterable = itertools.combinations(range(n), 3)
    else:
        rng = np.random.default_rng([seed, n])
        triples = (tuple(int(t) for t in rng.integers(0, n, size=3)) for _ in range(samples))
    bad = [t for t in triples if _jacobi_fails(L, *t)]
    return [f"Jacobi fails on basis triple {t} ({L.labels[t[0]]}, {L.labels[t[1]]}, {L.labels[t[2]]})" for t in bad[:5]]


def check_antisymmetry(L: LieAlgebra) -> list[str]:
    out = []
    for (i, j), terms in L.structure.items():
        back = dict(L.structure.get((j, i), ()))
        if {k: -c for k, c in terms} != back:
            out.append(f"[e{i}, e{j}] != -[e{j}, e{i}]")
    return out


def check_chevalley_relations(L: LieAlgebra) -> list[str]:
    """[H_i, X_a] = <a, a_i^vee> X_a and [X_a, X_-a] = H_a with a(H_a) = 2."""
    rs = L.rs
    out = []
    for a in rs.roots:
        xa = L.x(a)
        for i in range(rs.rank):
            c = pairing(rs, a, rs.simple_root(i))
            if L.bracket(L.cartan(i), xa) != tuple(c * v for v in xa):
                out.append(f"[H{i + 1}, X{a}] is not {c} X{a}")
        h = L.bracket(xa, L.x(tuple(-v for v in a)))
        if h != L.coroot(a):
            out.append(f"[X{a}, X-{a}] is not H_{a}")
        if L.bracket(h, xa) != tuple(2 * v for v in xa):
            out.append(f"{a}(H_{a}) != 2")
    return out


def _sparse_killing(L: LieAlgebra, x: dict, y: dict) -> Fraction:
    g = L.killing_gram
    return sum((a * y[j] * g[i, j] for i, a in x.items() for j in y if (i, j) in g), Fraction(0))


def check_killing_invariance(L: LieAlgebra, samples: int, seed: int = 0, terms: int = 6) -> list[str]:
    """L([x,y],z) = L(x,[y,z]) for random x, y, z with ``terms`` nonzero
    rational coordinates each."""
    rng = np.random.default_rng([seed, 17])
    out = []
    for _ in range(samples):
        x, y, z = (
            {int(k): Fraction(int(rng.integers(-5, 6)) or 1, int(rng.integers(1, 4)))
             for k in rng.choice(L.dim, size=min(terms, L.dim), replace=False)}
            for _ in range(3)
        )
        lhs = _sparse_killing(L, _sparse_bracket(L, x, y), z)
        rhs = _sparse_killing(L, x, _sparse_bracket(L, y, z))
        if lhs != rhs:
            out.append(f"L([x,y],z) = {lhs} but L(x,[y,z]) = {rhs}")
            break
    return out


def check_strong_orthogonality(rs: RootSystem) -> list[str]:
    eps = [n.epsilon for n in cascade(rs)]
    out = []
    for a, b in itertools.combinations(eps, 2):
        if rs.is_root(add(a, b)) or rs.is_root(sub(a, b)):
            out.append(f"cascade roots {a} and {b} are not strongly orthogonal")
    return out


def check_cascade_nesting(rs: RootSystem) -> list[str]:
    """Two cascade subsets are nested, or no root of one adds to a root of the other."""
    nodes = cascade(rs)
    out = []
    for K, K2 in itertools.combinations(nodes, 2):
        if K.subset <= K2.subset or K2.subset <= K.subset:
            continue
        if K.subset & K2.subset:
            out.append(f"{K.labels()} and {K2.labels()} overlap without nesting")
            continue
        for a in roots_of(rs, K.subset):
            if any(rs.is_root(add(a, b)) for b in roots_of(rs, K2.subset)):
                out.append(f"roots of {K.labels()} and {K2.labels()} add to a root")
                break
    return out


def check_gamma_partition(rs: RootSystem) -> list[str]:
    out = []
    seen: dict = {}
    for node in cascade(rs):
        for a in node.gamma:
            if a in seen:
                out.append(f"{a} lies in Gamma of both {seen[a]} and {node.labels()}")
            seen[a] = node.labels()
        pos_k = positive_roots_of(rs, node.subset)
        if set(node.gamma) != {a for a in pos_k if pairing(rs, a, node.epsilon) != 0}:
            out.append(f"Gamma of {node.labels()} is not R_+^K minus the eps-orthogonal roots")
        gset = set(node.gamma)
        for a, b in itertools.combinations_with_replacement(node.gamma, 2):
            s = add(a, b)
            if rs.is_root(s) and s != node.epsilon:
                out.append(f"{a} + {b} is a root other than eps in Gamma of {node.labels()}")
        if not gset <= set(pos_k):
            out.append(f"Gamma of {node.labels()} contains a non-positive root")
    if set(seen) != set(rs.positive_roots):
        out.append("the Gamma sets do not cover R_+")
    return out


def check_highest_root_pairings(rs: RootSystem) -> list[str]:
    """<a, eps_S^vee> in {0, 1} for a in R_+^S other than eps_S, S a cascade subset."""
    out = []
    for node in cascade(rs):
        eps = highest_root(rs, node.subset)
        for a in positive_roots_of(rs, node.subset):
            if a != eps and pairing(rs, a, eps) not in (0, 1):
                out.append(f"<{a}, {eps}^vee> = {pairing(rs, a, eps)}")
    return out


def check_heisenberg(L: LieAlgebra) -> list[str]:
    """a_K = sum of g^a over Gamma^K has [a_K, a_K] in g^{eps_K} and centre g^{eps_K}."""
    out = []
    for node in cascade(L.rs):
        idx = [L.root_index(a) for a in node.gamma]
        eps_i = L.root_index(node.epsilon)
        for i, j in itertools.combinations(idx, 2):
            br = L.basis_bracket(i, j)
            if set(br) - {eps_i}:
                out.append(f"[a_K, a_K] leaves g^eps for K = {node.labels()}")
                break
        # centre: x with [x, X_b] = 0 for all b; unknowns are coordinates on idx
        rows = []
        for j in idx:
            for k in range(L.dim):
                rows.append([L.basis_bracket(i, j).get(k, 0) for i in idx])
        kernel = linalg.nullspace(rows, len(idx))
        centre = linalg.echelon_basis([[v for v in vec] for vec in kernel])
        expected = [tuple(Fraction(int(i == eps_i)) for i in idx)]
        if centre != expected:
            out.append(f"centre of a_K is not g^eps for K = {node.labels()} (dim {len(centre)})")
    return out


def check_even_rank(L: LieAlgebra, a, samples: int, seed: int = 0, bound: int = 3) -> list[str]:
    """rank Phi_f is even for random forms with small entries.

    Small entries and a density sweeping from sparse to dense reach the
    degenerate ranks as well as the generic one.
    """
    rng = np.random.default_rng([seed, 1000, a.dim])
    out = []
    for t in range(samples):
        density = 0.1 + 0.9 * t / max(samples - 1, 1)
        c = rng.integers(-bound, bound, size=a.dim, endpoint=True)
        c[rng.random(a.dim) >= density] = 0
        r = linalg.rank(_kirillov_rows(a, [int(x) for x in c]))
        if r % 2:
            out.append(f"Kirillov matrix of odd rank {r}")
    return out


def check_k_g(stype: SimpleType) -> list[str]:
    rs = build_root_system(stype)
    got, want = k_g(rs), table_k_g(stype)
    return [] if got == want else [f"k_g({stype}) = {got}, table gives {want}"]


@dataclass
class CheckResult:
    name: str
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        detail = "" if self.ok else ": " + "; ".join(self.failures[:3])
        return f"[{status}] {self.name}{detail}"


def verify_type(stype: SimpleType, seed: int = 0, trials: int = 3, jacobi_samples: int = 2000) -> list[CheckResult]:
    """Every per-type check at moderate cost."""
    from .stability import (
        cascade_form,
        check_semisimple_commutative_centralizer,
        index_certificate,
        is_stable,
        verify_borel_centralizer_equivalence,
    )
    from .subalg import borel

    rs = build_root_system(stype)
    L = build_algebra(rs)
    b = borel(L)
    results = [
        CheckResult(f"{stype}: k_g matches table", check_k_g(stype)),
        CheckResult(f"{stype}: strong orthogonality of cascade roots", check_strong_orthogonality(rs)),
        CheckResult(f"{stype}: cascade subsets nested or independent", check_cascade_nesting(rs)),
        CheckResult(f"{stype}: Gamma sets partition R_+", check_gamma_partition(rs)),
        CheckResult(f"{stype}: highest-root pairings in {{0,1}}", check_highest_root_pairings(rs)),
        CheckResult(f"{stype}: antisymmetry", check_antisymmetry(L)),
        CheckResult(f"{stype}: Chevalley relations", check_chevalley_relations(L)),
        CheckResult(
            f"{stype}: Jacobi identity",
            check_jacobi(L, None if L.dim <= 40 else jacobi_samples, seed),
        ),
        CheckResult(f"{stype}: Heisenberg algebras a_K", check_heisenberg(L)),
        CheckResult(f"{stype}: even rank of Phi_f on b", check_even_rank(L, b, 5, seed)),
    ]
    cert = index_certificate(L, seed, trials)
    results.append(
        CheckResult(
            f"{stype}: index(b) = rank - k_g = {cert.expected}",
            [] if cert.ok else [f"sampled {cert.sampled_index}, cascade form {cert.cascade_centralizer_dim}"],
        )
    )
    results.append(
        CheckResult(
            f"{stype}: b^f for the cascade form is cut out by the eps_K",
            [] if verify_borel_centralizer_equivalence(L) else ["the two subspaces differ"],
        )
    )
    f = cascade_form(L, b)
    rep = is_stable(b, f, "phi_b(u)")
    fails = [] if rep.stable else [rep.verdict]
    if not check_semisimple_commutative_centralizer(b, f):
        fails.append("b^f is not a commutative algebra of semisimple elements")
    results.append(CheckResult(f"{stype}: cascade form is stable", fails))
    if L.dim <= 40:
        got = index(full(L), trials, seed)
        results.append(
            CheckResult(
                f"{stype}: index(g) = rank",
                [] if got == rs.rank else [f"index(g) = {got}"],
            )
        )
    return results


def verify_all(max_rank: int = 4, seed: int = 0, trials: int = 3) -> list[CheckResult]:
    from .d4 import run_counterexample, scenario_facts, scenario_failures

    results: list[CheckResult] = []
    for st in supported_types(max_rank):
        results.extend(verify_type(st, seed, trials))
    if max_rank >= 4:
        fails = scenario_failures(scenario_facts(seed, trials))
        for rep in run_counterexample():
            fails.extend(rep.failures)
        results.append(CheckResult("D4 parabolic admits no stable form", fails))
    return results


def summarize(results: Sequence[CheckResult]) -> tuple[int, int]:
    ok = sum(r.ok for r in results)
    return ok, len(results) - ok
