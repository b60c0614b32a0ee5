from fractions import Fraction

import numpy as np
import pytest
from conftest import algebra

from lieindex import linalg
from lieindex.d4 import counterexample_form
from lieindex.rootsystem import k_g, supported_types
from lieindex.stability import (
    StabilityReport,
    borel_centralizer_spaces,
    bracket_space,
    cascade_element,
    cascade_form,
    check_semisimple_commutative_centralizer,
    index_certificate,
    is_stable,
    subspace_intersection,
    verify_borel_centralizer_equivalence,
    verify_index_formula,
)
from lieindex.subalg import (
    LinearForm,
    SubalgebraError,
    borel,
    cartan_subalgebra,
    centralizer,
    full,
    parabolic,
    subalgebra,
)

RANK6 = [st for st in supported_types(6)]


def e(n, *idx):
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in idx]


def test_cascade_element_examples(A1, D4):
    assert cascade_element(A1) == A1.x((-1,))
    want = [(-1, 0, 0, 0), (-1, -2, -1, -1), (0, 0, -1, 0), (0, 0, 0, -1)]
    u = cascade_element(D4)
    assert {a for a in D4.rs.roots if u[D4.root_index(a)]} == set(want)
    assert all(u[D4.root_index(a)] == 1 for a in want)
    A3 = algebra("A", 3)
    u3 = cascade_element(A3)
    assert u3 == tuple(a + b for a, b in zip(A3.x((-1, -1, -1)), A3.x((0, -1, 0))))


def test_bracket_space_examples(A1):
    b = borel(A1)
    assert bracket_space(b, [A1.zero()]) == []
    assert bracket_space(b, [A1.x((1,))]) == [A1.x((1,))]
    h = cartan_subalgebra(algebra("D", 4))
    assert bracket_space(h, list(h.basis)) == []
    with pytest.raises(SubalgebraError):
        bracket_space(b, [A1.x((-1,))])


def test_subspace_intersection_examples():
    U = e(4, 0, 1)
    assert subspace_intersection(U, e(4, 1, 2)) == e(4, 1)
    assert subspace_intersection(U, U) == U
    assert subspace_intersection(U, []) == []


@pytest.mark.parametrize("fam,rank", [("A", 1), ("A", 2), ("D", 4), ("B", 3), ("G", 2), ("E", 6)])
def test_cascade_form_is_stable(fam, rank):
    L = algebra(fam, rank)
    b = borel(L)
    f = cascade_form(L, b)
    rep = is_stable(b, f, "phi_b(u)")
    assert rep.stable and rep.dim_intersection == 0
    assert rep.dim_centralizer == rank - k_g(L.rs)
    assert rep.warnings == []
    assert check_semisimple_commutative_centralizer(b, f)


def test_abelian_zero_form_is_stable():
    h = cartan_subalgebra(algebra("B", 2))
    rep = is_stable(h, LinearForm(h, (0, 0)))
    assert rep.stable and rep.dim_centralizer == 2 and rep.dim_bracket_space == 0
    # the Cartan subalgebra is not one of the known ad-algebraic kinds
    assert rep.warnings


def test_warning_for_unknown_subalgebra(A2):
    a = subalgebra(A2, [A2.x((1, 0)), A2.x((1, 1))])
    rep = is_stable(a, LinearForm(a, (1, 1)))
    assert rep.warnings and "ad-algebraic" in rep.warnings[0]


def test_form_on_wrong_subalgebra(A2):
    with pytest.raises(SubalgebraError):
        is_stable(full(A2), cascade_form(A2))


def test_d4_parabolic_is_not_stable():
    f = counterexample_form(1)
    p = f.on
    rep = is_stable(p, f)
    assert not rep.stable
    assert rep.dim_intersection == 1 == rep.dim_centralizer
    assert not check_semisimple_commutative_centralizer(p, f)


def test_semisimple_commutative_examples(A2):
    f = cascade_form(A2)
    assert check_semisimple_commutative_centralizer(borel(A2), f)
    assert check_semisimple_commutative_centralizer(borel(algebra("D", 4)), cascade_form(algebra("D", 4)))


@pytest.mark.parametrize("fam,rank,dim", [("A", 1, 0), ("D", 4, 0), ("A", 3, 1), ("A", 5, 2), ("E", 6, 2)])
def test_borel_centralizer_spaces(fam, rank, dim):
    L = algebra(fam, rank)
    lhs, rhs = borel_centralizer_spaces(L)
    assert len(lhs) == len(rhs) == dim
    assert verify_borel_centralizer_equivalence(L)
    # and the centralizer of the cascade form is exactly this space
    assert linalg.echelon_basis(centralizer(cascade_form(L))) == lhs


@pytest.mark.parametrize("fam,rank,expected", [("A", 5, 2), ("G", 2, 0), ("E", 6, 2), ("D", 4, 0), ("C", 4, 0)])
def test_index_formula_examples(fam, rank, expected):
    L = algebra(fam, rank)
    cert = index_certificate(L)
    assert cert.expected == cert.sampled_index == cert.cascade_centralizer_dim == expected
    assert verify_index_formula(L, seed=4)


def _random_forms(a, rng, n):
    for t in range(n):
        c = rng.integers(-2, 3, size=a.dim)
        c[rng.random(a.dim) < 0.3 + 0.6 * (t % 3) / 2] = 0
        yield LinearForm(a, tuple(int(x) for x in c))


@pytest.mark.parametrize("fam,rank", [("A", 2), ("B", 2), ("A", 3), ("G", 2)])
def test_report_invariants(fam, rank):
    """Rank identity, the semisimple-implies-stable direction, and rescaling."""
    L = algebra(fam, rank)
    rng = np.random.default_rng(8)
    for a in (borel(L), parabolic(L, [0]), full(L)):
        for f in _random_forms(a, rng, 12):
            rep = is_stable(a, f)
            assert rep.stable == (rep.dim_intersection == 0)
            cent = centralizer(f)
            br = bracket_space(a, cent)
            assert len(br) == rep.dim_bracket_space
            assert len(br) + len(cent) - linalg.span_rank(list(br) + list(cent)) == rep.dim_intersection
            if check_semisimple_commutative_centralizer(a, f):
                assert rep.stable
            assert is_stable(a, f.scaled(Fraction(-3, 5))).dim_intersection == rep.dim_intersection


def test_report_json(A2):
    rep = is_stable(borel(A2), cascade_form(A2), "phi")
    d = rep.to_json()
    assert d["stable"] is True and d["dim_centralizer"] == 1
    assert "stable" in d["verdict"]
    assert isinstance(rep, StabilityReport) and '"form_descr": "phi"' in rep.dumps()


@pytest.mark.slow
@pytest.mark.parametrize("st", RANK6, ids=str)
def test_rank6_sweep(st):
    L = algebra(st.family, st.rank)
    assert verify_borel_centralizer_equivalence(L)
    b = borel(L)
    f = cascade_form(L, b)
    assert is_stable(b, f).stable
    assert check_semisimple_commutative_centralizer(b, f)
