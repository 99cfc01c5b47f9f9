"""Structural predicates and recognisers for the named families."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .canon import certificate
from .families import Kind, cube, icosahedron, s_graph_table, s_prime, sun3
from .graph import Graph, bits, reach


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    p, q = g.p, g.q
    if p <= 4:
        return True
    if q > 3 * p - 6:
        return False
    # K5 and K3,3 have cycle rank 6 and 4, and cycle rank never grows on subgraphs.
    if q - p + len(g.components()) < 4:
        return True
    return nx.check_planarity(to_networkx(g))[0]


def is_outerplanar(g: Graph) -> bool:
    if g.p <= 3:
        return True
    if g.q > 2 * g.p - 3:
        return False
    return is_planar(g.add_vertex((1 << g.p) - 1))


class Connectivity(str, enum.Enum):
    DISCONNECTED = "disconnected"
    ONE = "1"
    TWO = "2"
    THREE_PLUS = "threePlus"

    def __str__(self) -> str:
        return self.value


def vertex_connectivity_upto3(g: Graph) -> int:
    """min(vertex connectivity, 3); complete graphs K_p report p - 1."""
    p = g.p
    full = (1 << p) - 1
    if all(m | (1 << v) == full for v, m in enumerate(g.adj)):
        return min(p - 1, 3)
    adj = g.adj

    def splits(removed: int) -> bool:
        rest = full & ~removed
        start = rest & -rest
        return reach(adj, start, removed) != rest

    if splits(0):
        return 0
    for v in range(p):
        if splits(1 << v):
            return 1
    for u in range(p):
        for v in range(u + 1, p):
            if splits((1 << u) | (1 << v)):
                return 2
    return 3


def connectivity_class(g: Graph) -> Connectivity:
    """Vertex connectivity bucketed at 3.  ``K_1`` (connectivity 0) reports ``disconnected``."""
    if g.p < 1:
        raise ValueError("connectivity is undefined for the empty graph")
    return [Connectivity.DISCONNECTED, Connectivity.ONE, Connectivity.TWO,
            Connectivity.THREE_PLUS][vertex_connectivity_upto3(g)]


def is_polyhedron(g: Graph) -> bool:
    return g.p >= 4 and min(g.degrees()) >= 3 and is_planar(g) and vertex_connectivity_upto3(g) == 3


# -- families -----------------------------------------------------------


@dataclass(frozen=True)
class FamilyLabel:
    kind: Kind
    param: int | None = None

    def __str__(self) -> str:
        names = {Kind.CUBE: "cube", Kind.ICOSAHEDRON: "icosahedron", Kind.SPRIME: "Sprime",
                 Kind.NONE: "none"}
        if self.kind in names:
            return names[self.kind]
        return f"{self.kind.value}_{self.param}"


NONE = FamilyLabel(Kind.NONE)


@dataclass(frozen=True)
class TMatch:
    m: int
    is_path: bool
    """g - x - y is the full path P_m."""
    is_matching: bool
    """g - x - y is a perfect matching."""
    apexes: tuple[int, int]

    @property
    def exact(self) -> str:
        if self.is_path:
            return "T"
        return "Tprime" if self.is_matching else "generic"


def _linear_forest(g: Graph, keep: int) -> tuple[int, int] | None:
    """If the induced graph on ``keep`` is a union of paths with >= 2 vertices each,
    return (number of components, number of edges); otherwise None."""
    adj = g.adj
    comps = 0
    edges = 0
    seen = 0
    for v in bits(keep):
        d = (adj[v] & keep).bit_count()
        if d == 0 or d > 2:
            return None
        edges += d
        if not seen >> v & 1:
            comp = reach(adj, 1 << v, ~keep)
            seen |= comp
            comps += 1
            size = comp.bit_count()
            inner = sum((adj[u] & keep).bit_count() for u in bits(comp)) // 2
            if inner != size - 1:
                return None  # a cycle
    return comps, edges // 2


def _dominators(g: Graph) -> list[int]:
    full = (1 << g.p) - 1
    return [v for v, m in enumerate(g.adj) if m | (1 << v) == full]


def recognize_T(g: Graph) -> TMatch | None:
    """Adjacent dominating pair x, y with g - x - y a linear forest without isolated vertices."""
    p = g.p
    if p < 4:
        return None
    dom = _dominators(g)
    full = (1 << p) - 1
    for i, x in enumerate(dom):
        for y in dom[i + 1:]:
            rest = full & ~(1 << x) & ~(1 << y)
            shape = _linear_forest(g, rest)
            if shape is None:
                continue
            comps, edges = shape
            m = p - 2
            return TMatch(m, comps == 1, edges * 2 == m, (x, y))
    return None


def twin_vertices(g: Graph) -> int:
    """Mask of vertices v having some w != v with N(w) = N(v)."""
    first: dict[int, int] = {}
    out = 0
    for v, m in enumerate(g.adj):
        if m in first:
            out |= (1 << v) | (1 << first[m])
        else:
            first[m] = v
    return out


def recognize_Q(g: Graph) -> int | None:
    """Least m in [3, max degree] such that every vertex of degree >= m has a twin."""
    if g.p == 0:
        return None
    twins = twin_vertices(g)
    lonely = [m.bit_count() for v, m in enumerate(g.adj) if not twins >> v & 1]
    m = max(3, max(lonely, default=0) + 1)
    if m > g.max_degree():
        return None
    if not is_planar(g):
        return None
    return m


def _apex_pair(g: Graph) -> tuple[int, int] | None:
    # Two non-adjacent vertices that both see every other vertex.
    p = g.p
    full = (1 << p) - 1
    cands = [v for v, m in enumerate(g.adj) if m.bit_count() == p - 2]
    for i, x in enumerate(cands):
        for y in cands[i + 1:]:
            if g.adj[x] == g.adj[y] == full & ~(1 << x) & ~(1 << y):
                return x, y
    return None


def _is_cycle(g: Graph, keep: int) -> bool:
    if keep.bit_count() < 3:
        return False
    if any((g.adj[v] & keep).bit_count() != 2 for v in bits(keep)):
        return False
    return reach(g.adj, keep & -keep, ~keep) == keep


def recognize_D(g: Graph) -> int | None:
    p = g.p
    if p < 3 or p % 2 == 0:
        return None
    dom = _dominators(g)
    if not dom:
        return None
    c = dom[0]
    rest = ((1 << p) - 1) & ~(1 << c)
    if all((g.adj[v] & rest).bit_count() == 1 for v in bits(rest)):
        return (p - 1) // 2
    return None


def recognize_R(g: Graph) -> int | None:
    """Fan-like class H + K_1 with H a spanning, isolated-vertex-free subgraph of a path."""
    p = g.p
    if p < 4:
        return None
    full = (1 << p) - 1
    for c in _dominators(g):
        if _linear_forest(g, full & ~(1 << c)) is not None:
            return p - 1
    return None


@lru_cache(maxsize=1)
def _named_certificates() -> dict[bytes, FamilyLabel]:
    table = {certificate(cube()): FamilyLabel(Kind.CUBE),
             certificate(icosahedron()): FamilyLabel(Kind.ICOSAHEDRON),
             certificate(s_prime()): FamilyLabel(Kind.SPRIME),
             certificate(sun3()): FamilyLabel(Kind.SUN, 3)}
    from .graph6 import parse_graph6

    for k, g6 in s_graph_table().items():
        table[certificate(parse_graph6(g6))] = FamilyLabel(Kind.S, k)
    return table


def recognize_families(g: Graph) -> list[FamilyLabel]:
    """Every family label that applies to ``g``, most specific first."""
    out: list[FamilyLabel] = []
    p = g.p
    if 5 <= p <= 12:
        named = _named_certificates().get(certificate(g))
        if named is not None:
            out.append(named)
    t = recognize_T(g)
    if t is not None:
        if t.is_path:
            out.append(FamilyLabel(Kind.T, t.m))
        if t.is_matching:
            out.append(FamilyLabel(Kind.TPRIME, t.m))
        if not (t.is_path or t.is_matching):
            out.append(FamilyLabel(Kind.TCLASS, t.m))
    full = (1 << p) - 1
    pair = _apex_pair(g) if p >= 5 else None
    if pair is not None:
        rim = full & ~(1 << pair[0]) & ~(1 << pair[1])
        ell = p - 2
        if _is_cycle(g, rim):
            out.append(FamilyLabel(Kind.B, ell))
        elif ell >= 3 and _linear_forest(g, rim) == (1, ell - 1):
            out.append(FamilyLabel(Kind.BPRIME, ell))
    d = recognize_D(g)
    if d is not None:
        out.append(FamilyLabel(Kind.D, d))
    if p >= 3 and _is_cycle(g, full):
        out.append(FamilyLabel(Kind.CYCLE, p))
    if p >= 1 and g.q == p - 1 and _linear_forest(g, full) in ((1, p - 1),):
        out.append(FamilyLabel(Kind.PATH, p))
    if p == 1:
        out.append(FamilyLabel(Kind.PATH, 1))
    if pair is None and p >= 3:
        pair = _apex_pair(g)
    if pair is not None:
        rim = full & ~(1 << pair[0]) & ~(1 << pair[1])
        if all(not (g.adj[v] & rim) for v in bits(rim)):
            out.append(FamilyLabel(Kind.K2, p - 2))
    r = recognize_R(g)
    if r is not None:
        out.append(FamilyLabel(Kind.RCLASS, r))
    qm = recognize_Q(g)
    if qm is not None:
        out.append(FamilyLabel(Kind.Q, qm))
    return out


def recognize_family(g: Graph) -> FamilyLabel:
    labels = recognize_families(g)
    return labels[0] if labels else NONE


__all__ = [
    "Connectivity", "FamilyLabel", "TMatch", "certificate", "connectivity_class",
    "is_outerplanar", "is_planar", "is_polyhedron", "recognize_D", "recognize_Q",
    "recognize_R", "recognize_T", "recognize_family", "recognize_families", "to_networkx",
    "twin_vertices", "vertex_connectivity_upto3",
]
