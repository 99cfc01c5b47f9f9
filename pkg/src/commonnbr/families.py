"""Constructors for the named graphs and graph families.

Vertex layouts are fixed so that recognisers and tests can rely on them:

* path-based joins (``T``, ``Tprime``, ``Tclass``): ``H`` on ``0..m-1``, the two
  adjacent apexes are ``m`` and ``m+1``;
* bipyramids (``B``, ``Bprime``): rim on ``0..l-1``, non-adjacent apexes ``l``, ``l+1``;
* fans (``Rclass``): ``H`` on ``0..l-1``, apex ``l``;
* ``D``: centre ``0`` and triangles ``(0, 2i-1, 2i)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .canon import certificate
from .graph import Graph, GraphError


class Kind(str, enum.Enum):
    T = "T"
    TPRIME = "Tprime"
    TCLASS = "Tclass"
    Q = "Q"
    B = "B"
    BPRIME = "Bprime"
    D = "D"
    RCLASS = "Rclass"
    K2 = "K2"
    S = "S"
    SPRIME = "Sprime"
    CUBE = "Cube"
    SUN = "Sun"
    ICOSAHEDRON = "Icosahedron"
    CYCLE = "Cycle"
    PATH = "Path"
    NONE = "None"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FamilySpec:
    kind: Kind
    param: int | None = None
    mask: int | None = None
    """For ``Tclass``/``Rclass``: bit ``i`` keeps the path edge ``i -- i+1``."""

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))


# -- primitive graphs ---------------------------------------------------


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n).complement()


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a).join(Graph(b))


def _masked_path(n: int, mask: int) -> Graph:
    if n < 2:
        raise GraphError(f"path subgraph needs at least 2 vertices, got {n}")
    if mask < 0 or mask >> (n - 1):
        raise GraphError(f"mask {mask:#x} has bits beyond the {n - 1} path edges")
    for v in range(n):
        left = v > 0 and mask >> (v - 1) & 1
        right = v < n - 1 and mask >> v & 1
        if not (left or right):
            raise GraphError(f"mask {mask:#x} leaves vertex {v} isolated")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1) if mask >> i & 1])


def matching_mask(n: int) -> int:
    """Mask selecting a perfect matching of the path on ``n`` (even) vertices."""
    return sum(1 << i for i in range(0, n - 1, 2))


_CUBE = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
         (0, 4), (1, 5), (2, 6), (3, 7)]

_ICOSAHEDRON = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
    (1, 6), (2, 6), (2, 7), (3, 7), (3, 8), (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
    (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
    (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
]


def cube() -> Graph:
    return Graph.from_edges(8, _CUBE)


def icosahedron() -> Graph:
    return Graph.from_edges(12, _ICOSAHEDRON)


def s_prime() -> Graph:
    # x=0, y=1 both see w1=2, w2=3, w3=4; z=5 sees w1 and w2.
    return Graph.from_edges(6, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (5, 2), (5, 3)])


def sun3() -> Graph:
    """Triangle 0-1-2 with an ear on each side: 3 on 01, 4 on 02, 5 on 12."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)])


S_GRAPH_FILE = "s_graphs.tsv"


@lru_cache(maxsize=1)
def s_graph_table() -> dict[int, bytes]:
    """Committed canonical graph6 strings of the derived graphs S_3 .. S_9."""
    out: dict[int, bytes] = {}
    try:
        text = resources.files("commonnbr.data").joinpath(S_GRAPH_FILE).read_text()
    except FileNotFoundError:
        return out
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, _order, g6, _digest = line.split("\t")
        out[int(name.lstrip("S"))] = g6.encode()
    return out


def s_graph(k: int) -> Graph:
    from .graph6 import parse_graph6

    table = s_graph_table()
    if k not in table:
        raise GraphError(f"S_{k} is not in the committed table (known: {sorted(table)})")
    return parse_graph6(table[k])


# -- the dispatcher -----------------------------------------------------


def _need(spec: FamilySpec, lo: int, even: bool = False) -> int:
    if spec.param is None:
        raise GraphError(f"{spec.kind} needs a parameter")
    if spec.param < lo or (even and spec.param % 2):
        rule = f">= {lo}" + (" and even" if even else "")
        raise GraphError(f"{spec.kind} parameter must be {rule}, got {spec.param}")
    return spec.param


def construct_family(spec: FamilySpec) -> Graph:
    k = spec.kind
    if k is Kind.T:
        m = _need(spec, 2)
        return path(m).join(complete(2))
    if k is Kind.TPRIME:
        m = _need(spec, 2, even=True)
        return _masked_path(m, matching_mask(m)).join(complete(2))
    if k is Kind.TCLASS:
        m = _need(spec, 2)
        mask = (1 << (m - 1)) - 1 if spec.mask is None else spec.mask
        return _masked_path(m, mask).join(complete(2))
    if k is Kind.RCLASS:
        m = _need(spec, 3)
        mask = (1 << (m - 1)) - 1 if spec.mask is None else spec.mask
        return _masked_path(m, mask).join(Graph(1))
    if k is Kind.B:
        return cycle(_need(spec, 3)).join(Graph(2))
    if k is Kind.BPRIME:
        return path(_need(spec, 3)).join(Graph(2))
    if k is Kind.D:
        n = _need(spec, 1)
        edges = []
        for i in range(1, n + 1):
            edges += [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]
        return Graph.from_edges(2 * n + 1, edges)
    if k is Kind.K2:
        return complete_bipartite(2, _need(spec, 1))
    if k is Kind.CYCLE:
        return cycle(_need(spec, 3))
    if k is Kind.PATH:
        return path(_need(spec, 1))
    if k is Kind.CUBE:
        return cube()
    if k is Kind.ICOSAHEDRON:
        return icosahedron()
    if k is Kind.SPRIME:
        return s_prime()
    if k is Kind.SUN:
        if spec.param not in (None, 3):
            raise GraphError(f"only the 3-sun is supported, got {spec.param}")
        return sun3()
    if k is Kind.S:
        n = _need(spec, 3)
        if n > 9:
            raise GraphError(f"S_k is defined for 3 <= k <= 9, got {n}")
        return s_graph(n)
    raise GraphError(f"{k} has no single constructor")


def _members(m: int, apexes: Graph, lo: int) -> list[Graph]:
    if m < lo or m > 16:
        raise GraphError(f"member enumeration supports {lo} <= m <= 16, got {m}")
    seen: dict[bytes, Graph] = {}
    for mask in range(1 << (m - 1)):
        try:
            h = _masked_path(m, mask)
        except GraphError:
            continue
        g = h.join(apexes)
        seen.setdefault(certificate(g), g)
    return list(seen.values())


def tclass_members(m: int) -> list[Graph]:
    """Every member of the class H + K_2 (H a spanning, isolated-vertex-free subgraph of P_m)."""
    return _members(m, complete(2), 2)


def rclass_members(m: int) -> list[Graph]:
    """Every member of the class H + K_1 with H as in ``tclass_members``."""
    return _members(m, Graph(1), 3)
