from fractions import Fraction

import pytest
import sympy

from lieindex import d4
from lieindex.rootsystem import format_root
from lieindex.subalg import centralizer


def sympy_centralizer(f):
    """Kernel of f([b_i, b_j]) from ambient brackets, in sympy."""
    a = f.on
    L = a.ambient
    n = a.dim
    M = sympy.zeros(n, n)
    for i in range(n):
        for j in range(n):
            v = f(L.bracket(a.basis[i], a.basis[j]))
            M[i, j] = sympy.Rational(v.numerator, v.denominator)
    return M.nullspace()


def test_scenario_facts():
    facts = d4.scenario_facts()
    assert facts["dim_p"] == 17
    assert sorted(facts["cascade"]) == [[1], [1, 2, 3, 4], [3], [4]]
    assert facts["index_b"] == 0
    assert d4.scenario_failures(facts) == []


def test_counterexample_form_at_zero_is_cascade_form():
    from lieindex.stability import cascade_element
    from lieindex.subalg import form_from_element

    L, p = d4.build_scenario()
    assert d4.counterexample_form(0).coords == form_from_element(p, cascade_element(L)).coords


def test_grading_element():
    L, _ = d4.build_scenario()
    h = d4.grading_element(L)
    for i, want in enumerate(d4.H_VALUES):
        x = L.x(L.rs.simple_root(i))
        assert L.bracket(h, x) == tuple(want * c for c in x)


@pytest.mark.parametrize("lam", d4.DEFAULT_LAMBDAS, ids=str)
def test_counterexample(lam):
    rep, = d4.run_counterexample([lam])
    assert rep.ok, rep.failures
    assert rep.dim_pf == 1
    assert set(rep.support) == (d4.SUPPORT_NONZERO if lam else d4.SUPPORT_ZERO)
    assert len(rep.support) == (8 if lam else 4)
    assert all(rep.coefficients.values())
    assert rep.coefficients[format_root((0, -1, 0, 0))] == 1
    assert rep.h_eigen_check
    assert rep.stability_verdict is False and rep.dim_intersection == 1


@pytest.mark.parametrize("lam", [Fraction(0), Fraction(1), Fraction(-3, 7)], ids=str)
def test_centralizer_agrees_with_sympy(lam):
    f = d4.counterexample_form(lam)
    ns = sympy_centralizer(f)
    assert len(ns) == 1
    x = f.on.element([Fraction(str(c)) for c in ns[0]])
    ours = centralizer(f)[0]
    L = f.on.ambient
    k = L.root_index((0, -1, 0, 0))
    assert tuple(c / x[k] for c in x) == tuple(c / ours[k] for c in ours)


def test_other_lambdas_match_lambda_one():
    base, *rest = d4.run_counterexample([1, 2, 5, -1, Fraction(11, 3)])
    for rep in rest:
        assert set(rep.support) == set(base.support)
        assert (rep.dim_pf, rep.h_eigen_check, rep.stability_verdict) == (1, True, False)


def test_report_json_and_failure_reporting():
    rep, = d4.run_counterexample([Fraction(-3, 7)])
    j = rep.to_json()
    assert j["lambda"] == "-3/7" and j["stable"] is False and j["failures"] == []
    assert all("/" in v for v in j["coefficients"].values())


def test_failures_are_named():
    bad = d4.scenario_failures({"dim_p": 16, "cascade": [[1, 2, 3, 4]], "index_b": 1})
    assert len(bad) == 3 and "17" in bad[0]
