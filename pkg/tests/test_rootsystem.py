import json

import pytest
from conftest import roots

from lieindex.rootsystem import (
    RootSystemError,
    SimpleType,
    build_root_system,
    cascade,
    cascade_forest,
    connected_components,
    gamma_partition,
    highest_root,
    k_g,
    pairing,
    positive_roots_of,
    supported_types,
    table_k_g,
)
from lieindex import verify


def weyl_orbit_roots(rs):
    """All roots as the orbit of the simple roots under simple reflections."""
    l = rs.rank
    frontier = [rs.simple_root(i) for i in range(l)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(l):
                c = sum(b[j] * rs.cartan[i][j] for j in range(l))
                r = tuple(b[j] - (c if j == i else 0) for j in range(l))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


KNOWN_POSITIVE = {"A": lambda l: l * (l + 1) // 2, "B": lambda l: l * l, "C": lambda l: l * l,
                  "D": lambda l: l * (l - 1), "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
                  "F": lambda l: 24, "G": lambda l: 6}


@pytest.mark.parametrize("st", supported_types(8), ids=str)
def test_closure_agrees_with_weyl_orbit(st):
    rs = build_root_system(st)
    assert set(rs.roots) == weyl_orbit_roots(rs)
    assert len(rs.positive_roots) == KNOWN_POSITIVE[st.family](st.rank)


@pytest.mark.parametrize("st", supported_types(8), ids=str)
def test_cartan_matrix_shape(st):
    rs = build_root_system(st)
    for i, row in enumerate(rs.cartan):
        assert row[i] == 2
        assert all(c in (0, -1, -2, -3) for j, c in enumerate(row) if j != i)
    for i in range(rs.rank):
        assert rs.simple_root(i) in rs.positive_roots
    for a in rs.roots:
        assert all(x >= 0 for x in a) or all(x <= 0 for x in a)


def test_small_examples():
    a2 = roots("A", 2)
    assert a2.positive_roots == ((1, 0), (0, 1), (1, 1))
    d4 = roots("D", 4)
    assert len(d4.positive_roots) == 12 and (1, 2, 1, 1) in d4.positive_roots
    assert len(roots("G", 2).positive_roots) == 6


def test_bourbaki_d4_branch_node():
    d4 = roots("D", 4)
    assert connected_components(d4, {0, 2, 3}) == [{0}, {2}, {3}]
    assert all(d4.cartan[1][j] == -1 for j in (0, 2, 3))


@pytest.mark.parametrize(
    "family,rank,msg",
    [("A", 0, "A requires rank >= 1"), ("B", 1, "B requires"), ("C", 2, "C requires"), ("D", 3, "D requires"),
     ("E", 5, "E requires"), ("E", 9, "E requires"), ("F", 3, "F requires"), ("G", 3, "G requires"),
     ("X", 2, "unknown family")],
)
def test_invalid_types_are_rejected(family, rank, msg):
    with pytest.raises(RootSystemError, match=msg):
        SimpleType(family, rank)


def test_pairing_examples():
    a2, d4 = roots("A", 2), roots("D", 4)
    assert pairing(a2, (1, 0), (1, 0)) == 2
    assert pairing(d4, (1, 0, 0, 0), (0, 1, 0, 0)) == -1
    # the highest root of D4 is orthogonal to alpha_1 (so {alpha_1} is a cascade subset)
    assert pairing(d4, (1, 2, 1, 1), (1, 0, 0, 0)) == 0
    assert pairing(d4, (1, 2, 1, 1), (0, 1, 0, 0)) == 1
    with pytest.raises(RootSystemError):
        pairing(d4, (1, 0, 0, 0), (1, 0, 1, 1))


def test_pairing_is_integral_and_linear():
    for st in supported_types(4):
        rs = build_root_system(st)
        for a in rs.roots:
            for b in rs.roots:
                p = pairing(rs, b, a)
                assert p == sum(c * pairing(rs, rs.simple_root(i), a) for i, c in enumerate(b))


def test_highest_root_examples():
    d4, a3 = roots("D", 4), roots("A", 3)
    assert highest_root(d4, range(4)) == (1, 2, 1, 1)
    assert highest_root(a3, range(3)) == (1, 1, 1)
    for i in range(4):
        assert highest_root(d4, {i}) == d4.simple_root(i)
    with pytest.raises(RootSystemError):
        highest_root(d4, set())
    with pytest.raises(RootSystemError, match="not connected"):
        highest_root(d4, {0, 2})


def test_highest_root_is_componentwise_maximum():
    for st in supported_types(8):
        rs = build_root_system(st)
        eps = highest_root(rs, range(rs.rank))
        assert all(all(e >= c for e, c in zip(eps, a)) for a in rs.positive_roots)


def test_connected_components():
    a3 = roots("A", 3)
    assert connected_components(a3, set()) == []
    assert connected_components(a3, {0, 1}) == [{0, 1}]
    assert connected_components(a3, {2, 0}) == [{0}, {2}]


def test_cascade_examples():
    d4, a3 = roots("D", 4), roots("A", 3)
    assert [n.labels() for n in cascade(d4)] == [[1, 2, 3, 4], [1], [3], [4]]
    assert cascade(d4, set()) == []
    assert [n.labels() for n in cascade(a3)] == [[1, 2, 3], [2]]
    assert [n.epsilon for n in cascade(a3)] == [(1, 1, 1), (0, 1, 0)]


@pytest.mark.parametrize("st", supported_types(8), ids=str)
def test_k_g_matches_closed_form(st):
    assert k_g(build_root_system(st)) == table_k_g(st)


def test_k_g_examples():
    assert k_g(roots("A", 5)) == 3
    assert k_g(roots("D", 4)) == 4
    assert k_g(roots("E", 8)) == 8


def test_gamma_partition_examples():
    a2, d4 = roots("A", 2), roots("D", 4)
    (g,) = gamma_partition(a2).values()
    assert set(g) == set(a2.positive_roots)
    sizes = [len(n.gamma) for n in cascade(d4)]
    assert sizes == [9, 1, 1, 1]
    assert cascade(d4)[1].gamma == ((1, 0, 0, 0),)


@pytest.mark.parametrize("st", supported_types(8), ids=str)
def test_cascade_invariants(st):
    rs = build_root_system(st)
    assert verify.check_strong_orthogonality(rs) == []
    assert verify.check_cascade_nesting(rs) == []
    assert verify.check_gamma_partition(rs) == []
    assert verify.check_highest_root_pairings(rs) == []
    for node in cascade(rs):
        assert len(connected_components(rs, node.subset)) == 1
        pos = positive_roots_of(rs, node.subset)
        assert set(node.gamma) == {a for a in pos if pairing(rs, a, node.epsilon) > 0}


def test_parent_links_follow_the_recursion():
    nodes = cascade(roots("C", 4))
    assert nodes[0].parent is None
    for n in nodes[1:]:
        assert n.subset < n.parent.subset


def test_json_shapes():
    d4 = roots("D", 4)
    doc = json.loads(json.dumps(d4.to_json()))
    assert doc["family"] == "D" and doc["rank"] == 4 and len(doc["positive_roots"]) == 12
    forest = cascade_forest(d4)
    assert len(forest) == 1
    top = forest[0]
    assert top["subset"] == [1, 2, 3, 4] and top["epsilon"] == [1, 2, 1, 1]
    assert [c["subset"] for c in top["children"]] == [[1], [3], [4]]
