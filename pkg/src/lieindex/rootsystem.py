"""Root systems of the simple types, subdiagrams and the cascade of
strongly orthogonal roots.

Simple roots are numbered as in Bourbaki's tables.  Internally they are
indexed from 0; everything that is printed or serialized uses the 1-based
labels ``alpha_1 .. alpha_l``.

A root is a tuple of integers: its coordinates over the simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

Root = tuple  # tuple[int, ...]

FAMILIES = "ABCDEFG"

_RANK_RULES = {
    "A": (lambda l: l >= 1, "A requires rank >= 1"),
    "B": (lambda l: l >= 2, "B requires rank >= 2"),
    "C": (lambda l: l >= 3, "C requires rank >= 3"),
    "D": (lambda l: l >= 4, "D requires rank >= 4"),
    "E": (lambda l: l in (6, 7, 8), "E requires rank in {6, 7, 8}"),
    "F": (lambda l: l == 4, "F requires rank 4"),
    "G": (lambda l: l == 2, "G requires rank 2"),
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        if fam not in _RANK_RULES:
            raise RootSystemError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        ok, rule = _RANK_RULES[fam]
        if not isinstance(self.rank, int) or not ok(self.rank):
            raise RootSystemError(f"invalid rank {self.rank} for type {fam}: {rule}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def supported_types(max_rank: int = 8) -> list[SimpleType]:
    """Every simple type of rank <= max_rank, in family order."""
    out = []
    for fam in FAMILIES:
        for l in range(1, max_rank + 1):
            try:
                out.append(SimpleType(fam, l))
            except RootSystemError:
                pass
    return out


def _bonds_and_lengths(st: SimpleType) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Squared lengths of the simple roots and the inner products of bonded
    pairs, in Bourbaki numbering (0-based).  Short roots have length 2."""
    fam, l = st.family, st.rank
    lengths = [2] * l
    ip: dict[tuple[int, int], int] = {}
    if fam == "A":
        for i in range(l - 1):
            ip[i, i + 1] = -1
    elif fam == "B":
        lengths = [4] * (l - 1) + [2]
        for i in range(l - 1):
            ip[i, i + 1] = -2
    elif fam == "C":
        lengths = [2] * (l - 1) + [4]
        for i in range(l - 2):
            ip[i, i + 1] = -1
        ip[l - 2, l - 1] = -2
    elif fam == "D":
        for i in range(l - 2):
            ip[i, i + 1] = -1
        ip[l - 3, l - 1] = -1
    elif fam == "E":
        ip[0, 2] = -1
        ip[1, 3] = -1
        for i in range(2, l - 1):
            ip[i, i + 1] = -1
    elif fam == "F":
        lengths = [4, 4, 2, 2]
        ip[0, 1] = -2
        ip[1, 2] = -2
        ip[2, 3] = -1
    elif fam == "G":
        lengths = [2, 6]
        ip[0, 1] = -3
    return lengths, ip


@dataclass(frozen=True)
class RootSystem:
    """Reduced irreducible root system given by its simple type.

    ``cartan[i][j]`` is ``<alpha_j, alpha_i^vee>``, so row ``i`` lists the
    eigenvalues of ``H_i`` on the simple root vectors.
    """

    stype: SimpleType
    cartan: tuple
    lengths: tuple  # squared lengths of the simple roots
    positive_roots: tuple

    @property
    def rank(self) -> int:
        return self.stype.rank

    @property
    def family(self) -> str:
        return self.stype.family

    @cached_property
    def gram(self) -> tuple:
        """Symmetric matrix of inner products (alpha_i, alpha_j)."""
        l = self.rank
        return tuple(
            tuple(Fraction(self.cartan[j][i] * self.lengths[j], 2) for j in range(l))
            for i in range(l)
        )

    @cached_property
    def simple_bonds(self) -> frozenset:
        l = self.rank
        return frozenset((i, j) for i in range(l) for j in range(i + 1, l) if self.cartan[i][j])

    @cached_property
    def roots(self) -> tuple:
        """All roots: positive ones, then their negatives in the same order."""
        return self.positive_roots + tuple(neg(a) for a in self.positive_roots)

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def root_index(self) -> dict:
        return {a: i for i, a in enumerate(self.roots)}

    def is_root(self, beta) -> bool:
        return tuple(beta) in self._root_set

    def simple_root(self, i: int) -> Root:
        return tuple(int(j == i) for j in range(self.rank))

    def inner(self, beta, gamma) -> Fraction:
        g = self.gram
        return sum(
            (b * c * g[i][j] for i, b in enumerate(beta) if b for j, c in enumerate(gamma) if c),
            Fraction(0),
        )

    def norm2(self, beta) -> Fraction:
        return self.inner(beta, beta)

    def coroot_coords(self, alpha) -> tuple:
        """alpha^vee as an integer combination of the simple coroots."""
        n = self.norm2(alpha)
        out = []
        for i, k in enumerate(alpha):
            c = Fraction(k * self.lengths[i]) / n
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(self.rank)}
        for i, j in self.simple_bonds:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(a) for a in self.positive_roots],
        }


def neg(a) -> Root:
    return tuple(-x for x in a)


def add(a, b) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def height(a) -> int:
    return sum(a)


def root_key(a) -> tuple:
    """Canonical order: by height, then lexicographically descending on
    coordinates, so alpha_1 precedes alpha_2."""
    return (height(a), tuple(-x for x in a))


def cartan_matrix(st: SimpleType) -> tuple:
    lengths, ip = _bonds_and_lengths(st)
    l = st.rank
    sym = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        sym[i][i] = Fraction(lengths[i])
    for (i, j), v in ip.items():
        sym[i][j] = sym[j][i] = Fraction(v)
    cartan = []
    for i in range(l):
        row = []
        for j in range(l):
            v = 2 * sym[j][i] / lengths[i]
            assert v.denominator == 1
            row.append(int(v))
        cartan.append(tuple(row))
    return tuple(cartan), tuple(lengths)


def build_root_system(stype: SimpleType | tuple[str, int]) -> RootSystem:
    """Enumerate the positive roots by closure upward from the simple roots.

    For a positive root beta and a simple root alpha_i, beta + alpha_i is a
    root iff p - <beta, alpha_i^vee> > 0 with p the length of the alpha_i
    string below beta.  Roots are produced height by height, so every
    string is already known when it is needed.
    """
    if not isinstance(stype, SimpleType):
        stype = SimpleType(*stype)
    cartan, lengths = cartan_matrix(stype)
    l = stype.rank
    simple = [tuple(int(j == i) for j in range(l)) for i in range(l)]
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(l):
                if beta == simple[i]:
                    continue
                p = 0
                down = sub(beta, simple[i])
                while down in known:
                    p += 1
                    down = sub(down, simple[i])
                pairing = sum(beta[j] * cartan[i][j] for j in range(l))
                if p - pairing > 0:
                    up = add(beta, simple[i])
                    if up not in known:
                        nxt.add(up)
        known |= nxt
        layer = sorted(nxt)
    positive = tuple(sorted(known, key=root_key))
    return RootSystem(stype, cartan, lengths, positive)


def pairing(rs: RootSystem, beta, alpha) -> int:
    """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
    alpha = tuple(alpha)
    if not rs.is_root(alpha):
        raise RootSystemError(f"{alpha} is not a root of {rs.stype}")
    v = 2 * rs.inner(beta, alpha) / rs.norm2(alpha)
    if v.denominator != 1:
        raise RootSystemError(f"non-integral pairing <{tuple(beta)}, {alpha}^vee> = {v}")
    return int(v)


def connected_components(rs: RootSystem, S: Iterable[int]) -> list[frozenset]:
    """Split S into connected pieces of the Dynkin graph, ordered by their
    smallest index."""
    S = set(S)
    adj = rs.adjacency()
    comps = []
    seen: set[int] = set()
    for start in sorted(S):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in S and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(rs: RootSystem, S: Iterable[int]) -> bool:
    S = set(S)
    return bool(S) and len(connected_components(rs, S)) == 1


def positive_roots_of(rs: RootSystem, S: Iterable[int]) -> list[Root]:
    """R_+^S: positive roots supported on S."""
    S = set(S)
    return [a for a in rs.positive_roots if all(c == 0 or i in S for i, c in enumerate(a))]


def roots_of(rs: RootSystem, S: Iterable[int]) -> list[Root]:
    pos = positive_roots_of(rs, S)
    return pos + [neg(a) for a in pos]


def highest_root(rs: RootSystem, S: Iterable[int]) -> Root:
    S = set(S)
    if not S:
        raise RootSystemError("highest root of an empty subset is undefined")
    if not is_connected(rs, S):
        raise RootSystemError(f"subset {sorted(i + 1 for i in S)} is not connected")
    pos = positive_roots_of(rs, S)
    top = [a for a in pos if all(all(x >= y for x, y in zip(a, b)) for b in pos)]
    if len(top) != 1:
        raise RootSystemError("no unique maximal root")  # cannot happen for connected S
    return top[0]


@dataclass(frozen=True, eq=False)
class CascadeNode:
    subset: frozenset
    epsilon: Root
    gamma: tuple
    parent: Optional["CascadeNode"] = field(default=None, repr=False)

    def labels(self) -> list[int]:
        return sorted(i + 1 for i in self.subset)


def _orthogonal_part(rs: RootSystem, S, eps) -> set[int]:
    return {i for i in S if pairing(rs, rs.simple_root(i), eps) == 0}


def cascade(rs: RootSystem, S: Iterable[int] | None = None) -> list[CascadeNode]:
    """The family K(S), depth first, components by smallest index."""
    if S is None:
        S = range(rs.rank)
    out: list[CascadeNode] = []

    def visit(T: set[int], parent: Optional[CascadeNode]):
        for comp in connected_components(rs, T):
            eps = highest_root(rs, comp)
            gamma = tuple(a for a in positive_roots_of(rs, comp) if pairing(rs, a, eps) > 0)
            node = CascadeNode(comp, eps, gamma, parent)
            out.append(node)
            visit(_orthogonal_part(rs, comp, eps), node)

    visit(set(S), None)
    return out


def k_g(rs: RootSystem) -> int:
    return len(cascade(rs))


def gamma_partition(rs: RootSystem) -> dict[CascadeNode, tuple]:
    return {node: node.gamma for node in cascade(rs)}


def table_k_g(stype: SimpleType) -> int:
    """Closed forms for the number of cascade roots of each simple type."""
    l = stype.rank
    return {
        "A": (l + 1) // 2,
        "B": l,
        "C": l,
        "D": 2 * (l // 2),
        "E": {6: 4, 7: 7, 8: 8}.get(l, 0),
        "F": 4,
        "G": 2,
    }[stype.family]


def cascade_forest(rs: RootSystem, S: Iterable[int] | None = None) -> list[dict]:
    """Cascade as nested JSON-ready dicts (1-based simple root labels)."""
    nodes = cascade(rs, S)
    entries = {
        id(n): {
            "subset": n.labels(),
            "epsilon": list(n.epsilon),
            "gamma": [list(a) for a in n.gamma],
            "children": [],
        }
        for n in nodes
    }
    roots = []
    for n in nodes:
        if n.parent is None:
            roots.append(entries[id(n)])
        else:
            entries[id(n.parent)]["children"].append(entries[id(n)])
    return roots


def format_root(beta) -> str:
    """Human readable form such as ``a1+2a2+a3+a4`` (``-`` prefix if negative)."""
    beta = tuple(beta)
    sign = ""
    if any(x < 0 for x in beta):
        sign, beta = "-", neg(beta)
    terms = []
    for i, c in enumerate(beta):
        if c:
            terms.append(f"{c if c != 1 else ''}a{i + 1}")
    return sign + ("(" + "+".join(terms) + ")" if sign and len(terms) > 1 else "+".join(terms))
