"""Immutable simple graphs on dense vertex indices, and common-neighbourhood spectra.

Neighbour sets are stored as integer bit masks, so the common neighbourhood of
a tuple of vertices is a word-wise AND of their masks.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from itertools import combinations


class GraphError(ValueError):
    """Malformed graph or invalid vertex arguments."""


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple undirected graph with vertices ``0 .. p-1``.

    ``adj[v]`` is the bit mask of the neighbours of ``v``.  Instances are
    immutable and hashable; equality is equality of labelled graphs.
    """

    __slots__ = ("p", "adj", "_hash")

    def __init__(self, p: int, adj: Sequence[int] | None = None):
        if p < 0:
            raise GraphError(f"vertex count must be non-negative, got {p}")
        adj = tuple(adj) if adj is not None else (0,) * p
        if len(adj) != p:
            raise GraphError(f"expected {p} adjacency masks, got {len(adj)}")
        full = (1 << p) - 1
        for v, m in enumerate(adj):
            if m & ~full or m < 0:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {p})")
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric for edge {v}-{u}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((p, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _trusted(cls, p: int, adj: tuple[int, ...]) -> Graph:
        # Internal fast path: caller guarantees a valid symmetric loop-free tuple.
        g = object.__new__(cls)
        object.__setattr__(g, "p", p)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_hash", hash((p, adj)))
        return g

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * p
        for u, v in edges:
            if not (0 <= u < p and 0 <= v < p):
                raise GraphError(f"edge {u}-{v} out of range for p={p}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(p, adj)

    @classmethod
    def from_neighbours(cls, nbrs: Sequence[Iterable[int]]) -> Graph:
        """Build from a list of neighbour collections, one per vertex."""
        adj = []
        for ns in nbrs:
            m = 0
            for u in ns:
                m |= 1 << u
            adj.append(m)
        return cls(len(adj), adj)

    # -- basic quantities -------------------------------------------------

    @property
    def q(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def __len__(self) -> int:
        return self.p

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.p == other.p and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, edges={self.edges()})"

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.p) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def degree_set(self) -> frozenset[int]:
        return frozenset(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- derived graphs ---------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.p
        for v, m in enumerate(self.adj):
            nm = 0
            for u in bits(m):
                nm |= 1 << perm[u]
            adj[perm[v]] = nm
        return Graph._trusted(self.p, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            m = 0
            for u in bits(self.adj[v]):
                if u in index:
                    m |= 1 << index[u]
            adj.append(m)
        return Graph(len(keep), adj)

    def delete(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced(v for v in range(self.p) if v not in drop)

    def add_vertex(self, nbr_mask: int) -> Graph:
        """Append vertex ``p`` adjacent to the vertices in ``nbr_mask``."""
        p = self.p
        adj = [m | ((nbr_mask >> v & 1) << p) for v, m in enumerate(self.adj)]
        adj.append(nbr_mask)
        return Graph._trusted(p + 1, tuple(adj))

    def union(self, other: Graph) -> Graph:
        """Disjoint union; ``other``'s vertices are shifted by ``self.p``."""
        s = self.p
        return Graph(self.p + other.p, self.adj + tuple(m << s for m in other.adj))

    def join(self, other: Graph) -> Graph:
        """Disjoint union plus every edge between the two parts."""
        s = self.p
        low = (1 << s) - 1
        high = ((1 << other.p) - 1) << s
        adj = tuple(m | high for m in self.adj) + tuple((m << s) | low for m in other.adj)
        return Graph(s + other.p, adj)

    def complement(self) -> Graph:
        full = (1 << self.p) - 1
        return Graph(self.p, tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by lowest vertex."""
        seen = 0
        out = []
        for v in range(self.p):
            if seen >> v & 1:
                continue
            comp = reach(self.adj, 1 << v, 0)
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.p == 0 or reach(self.adj, 1, 0) == (1 << self.p) - 1


def reach(adj: Sequence[int], start: int, blocked: int) -> int:
    """Mask of vertices reachable from the mask ``start`` avoiding ``blocked``."""
    seen = start & ~blocked
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen & ~blocked
        seen |= frontier
    return seen


class Spectrum(frozenset):
    """The set A_n(G): sizes of common neighbourhoods over all n-sets of vertices."""

    n: int

    def __new__(cls, n: int, values: Iterable[int] = ()):
        self = super().__new__(cls, values)
        self.n = n
        return self

    def __repr__(self) -> str:
        return f"Spectrum(n={self.n}, {sorted(self)})"

    def __reduce__(self):
        return (Spectrum, (self.n, tuple(self)))


class Profile(Mapping):
    """All spectra of a graph: ``profile[n]`` is A_n for every ``n >= 1``.

    Only ``1 <= n <= p`` are stored; larger ``n`` map to the empty spectrum.
    """

    def __init__(self, p: int, spectra: Mapping[int, Iterable[int]]):
        self.p = p
        self.by_n = {n: Spectrum(n, spectra.get(n, ())) for n in range(1, p + 1)}

    def __getitem__(self, n: int) -> Spectrum:
        if n < 1:
            raise KeyError(n)
        return self.by_n.get(n) or Spectrum(n)

    def __iter__(self):
        return iter(self.by_n)

    def __len__(self) -> int:
        return len(self.by_n)

    def __eq__(self, other) -> bool:
        if isinstance(other, Profile):
            return self.p == other.p and self.by_n == other.by_n
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"A{n}={sorted(s)}" for n, s in self.by_n.items())
        return f"Profile(p={self.p}: {body})"

    def from_three(self) -> list[frozenset[int]]:
        """The sequence A_3, A_4, ..., A_p used by the classification."""
        return [frozenset(self.by_n[n]) for n in range(3, self.p + 1)]


def _check_tuple(g: Graph, vertices: Sequence[int]) -> None:
    if not vertices:
        raise GraphError("vertex tuple must be non-empty")
    if len(set(vertices)) != len(vertices):
        raise GraphError(f"duplicate vertices in {tuple(vertices)}")
    for v in vertices:
        if not 0 <= v < g.p:
            raise GraphError(f"vertex {v} out of range for p={g.p}")


def common_neighbourhood(g: Graph, vertices: Sequence[int]) -> frozenset[int]:
    """Vertices adjacent to every vertex of ``vertices``."""
    _check_tuple(g, vertices)
    m = (1 << g.p) - 1
    for v in vertices:
        m &= g.adj[v]
    return frozenset(bits(m))


def _spectra(g: Graph) -> dict[int, set[int]]:
    # Depth-first over vertex subsets in increasing order carrying the running
    # intersection.  Once it is empty, every extension realises 0 as well.
    p = g.p
    adj = g.adj
    out: dict[int, set[int]] = {n: set() for n in range(1, p + 1)}
    stack = [(v, adj[v], 1) for v in range(p - 1, -1, -1)]
    while stack:
        last, common, size = stack.pop()
        if not common:
            for k in range(size, size + p - last):
                out[k].add(0)
            continue
        out[size].add(common.bit_count())
        for u in range(p - 1, last, -1):
            stack.append((u, common & adj[u], size + 1))
    return out


def a_set(g: Graph, n: int) -> Spectrum:
    """A_n(g) = {|N(u_1..u_n)| : u_1..u_n distinct}.  Empty when ``p < n``."""
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if n > g.p:
        return Spectrum(n)
    if n == 1:
        return Spectrum(1, g.degrees())
    vals = set()
    adj = g.adj
    full = (1 << g.p) - 1
    for combo in combinations(range(g.p), n):
        m = full
        for v in combo:
            m &= adj[v]
            if not m:
                break
        vals.add(m.bit_count())
        if len(vals) == g.p - n + 1:
            break
    return Spectrum(n, vals)


def profile(g: Graph) -> Profile:
    return Profile(g.p, _spectra(g))


def l_value(g: Graph) -> int:
    """Largest number of common neighbours of a pair, i.e. the largest l with K_{2,l} in g."""
    adj = g.adj
    best = 0
    for u in range(g.p):
        au = adj[u]
        for v in range(u + 1, g.p):
            c = (au & adj[v]).bit_count()
            if c > best:
                best = c
    return best


def union_spectrum(n: int, parts: Sequence[Iterable[int]], p: int) -> Spectrum:
    """A_n of a disjoint union of ``len(parts) >= 2`` graphs of total order ``p``.

    ``parts`` holds A_n of each part (empty for parts with fewer than n
    vertices).  For ``n >= 2`` an n-set can straddle two parts, which adds 0.
    """
    if n > p:
        return Spectrum(n)
    vals: set[int] = set()
    for part in parts:
        vals |= set(part)
    if n >= 2 and len(parts) >= 2:
        vals.add(0)
    return Spectrum(n, vals)
