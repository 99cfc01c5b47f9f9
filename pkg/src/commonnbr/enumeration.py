"""Isomorph-free enumeration of small graphs by canonical augmentation.

Each graph on ``k + 1`` vertices is produced from exactly one graph on ``k``
vertices: its parent is obtained by deleting a canonically chosen vertex of
minimum invariant key.  Children are formed by adding a vertex joined to one
representative of every orbit of neighbour sets under the parent's
automorphism group, and a child is kept only when the added vertex is in the
same automorphism orbit as the canonical deletion vertex.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator

from .canon import _orbit_roots, canonical_labelling
from .graph import Graph, bits
from .recognition import is_outerplanar, is_planar, is_polyhedron

MAX_ENUM_ORDER = 9
FILTERS = ("connected", "planar", "outerplanar", "polyhedral", "triangulation")

_BASES: dict[str, Callable[[Graph], bool]] = {
    "all": lambda g: True,
    "planar": is_planar,
    "outerplanar": is_outerplanar,
}
_levels: dict[tuple[str, int, int], list[Graph]] = {}


class EnumerationError(ValueError):
    pass


def _key(adj: tuple[int, ...], v: int) -> tuple:
    return (adj[v].bit_count(), sorted(adj[u].bit_count() for u in bits(adj[v])))


def _is_canonical_child(child: Graph) -> bool:
    adj = child.adj
    new = child.p - 1
    keys = [_key(adj, v) for v in range(child.p)]
    best = min(keys)
    if keys[new] != best:
        return False
    ties = [v for v in range(child.p) if keys[v] == best]
    if len(ties) == 1:
        return True
    lab = canonical_labelling(child)
    pos = lab.position()
    chosen = max(ties, key=pos.__getitem__)
    if chosen == new:
        return True
    roots = _orbit_roots(list(lab.generators), child.p)
    return roots[chosen] == roots[new]


def _mask_orbit(mask: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {mask}
    todo = [mask]
    while todo:
        m = todo.pop()
        for g in gens:
            img = 0
            for v in bits(m):
                img |= 1 << g[v]
            if img not in orbit:
                orbit.add(img)
                todo.append(img)
    return orbit


def children(parent: Graph, member: Callable[[Graph], bool] = _BASES["all"],
             max_edges: int | None = None, min_degree: int = 0) -> Iterator[Graph]:
    """Canonical one-vertex extensions of ``parent`` satisfying ``member``.

    With ``min_degree`` only children of at least that minimum degree are
    produced; such children have parents of minimum degree ``min_degree - 1``.
    """
    k = parent.p
    degs = parent.degrees()
    forced = 0
    for v, d in enumerate(degs):
        if d < min_degree - 1:
            return
        if d == min_degree - 1:
            forced |= 1 << v
    gens = list(canonical_labelling(parent).generators) if k > 1 else []
    q = parent.q
    seen: set[int] = set()
    for mask in range(1 << k):
        if mask in seen or mask & forced != forced:
            continue
        size = mask.bit_count()
        if size < min_degree or any(size > d + (mask >> v & 1) for v, d in enumerate(degs)):
            continue
        if gens:
            seen |= _mask_orbit(mask, gens)
        if max_edges is not None and q + size > max_edges:
            continue
        child = parent.add_vertex(mask)
        if _is_canonical_child(child) and member(child):
            yield child


def _edge_cap(base: str, p: int) -> int | None:
    if base == "planar" and p >= 3:
        return 3 * p - 6
    if base == "outerplanar" and p >= 2:
        return 2 * p - 3
    return None


def _level_list(base: str, p: int, min_degree: int = 0) -> list[Graph]:
    """All graphs of the base class on ``p`` vertices with the given minimum degree (cached)."""
    min_degree = max(0, min(min_degree, p - 1))
    key = (base, p, min_degree)
    if key in _levels:
        return _levels[key]
    if p == 1:
        out = [Graph(1)]
    else:
        member = _BASES[base]
        out = [c for g in _level_list(base, p - 1, min_degree - 1)
               for c in children(g, member, _edge_cap(base, p), min_degree)]
    _levels[key] = out
    return out


def _filter_fn(filters: Iterable[str]) -> Callable[[Graph], bool]:
    checks = []
    for f in filters:
        if f == "connected":
            checks.append(Graph.is_connected)
        elif f == "planar":
            checks.append(is_planar)
        elif f == "outerplanar":
            checks.append(is_outerplanar)
        elif f == "polyhedral":
            checks.append(is_polyhedron)
        elif f == "triangulation":
            checks.append(lambda g: g.p >= 3 and g.q == 3 * g.p - 6 and is_planar(g))
        else:
            raise EnumerationError(f"unknown filter {f!r}; choose from {', '.join(FILTERS)}")
    return lambda g: all(c(g) for c in checks)


def _base_for(filters: set[str]) -> str:
    if "outerplanar" in filters:
        return "outerplanar"
    if filters & {"planar", "polyhedral", "triangulation"}:
        return "planar"
    return "all"


def _min_degree_for(filters: set[str]) -> int:
    return 3 if "polyhedral" in filters or "triangulation" in filters else 0


def enumerate_graphs(p: int, filters: Iterable[str] = (), part: tuple[int, int] | None = None,
                     max_order: int = MAX_ENUM_ORDER) -> Iterator[Graph]:
    """One graph per isomorphism class on ``p`` vertices passing every filter.

    ``part = (i, k)`` restricts the last augmentation step to parents whose
    index is ``i`` modulo ``k``, splitting the stream into ``k`` disjoint pieces.
    ``max_order`` can be raised by callers willing to wait (polyhedra at order
    10 take minutes; general classes much longer).
    """
    filters = set(filters)
    keep = _filter_fn(sorted(filters))
    if not 1 <= p <= max_order:
        raise EnumerationError(f"built-in enumeration supports 1 <= p <= {max_order}, got {p}; "
                               "ingest larger corpora from graph6 files")
    base = _base_for(filters)
    mindeg = 0 if p < 4 else _min_degree_for(filters)
    if part is None:
        yield from (g for g in _level_list(base, p, mindeg) if keep(g))
        return
    i, k = part
    if not 0 <= i < k:
        raise EnumerationError(f"invalid partition {part}")
    if p == 1:
        if i == 0:
            yield from (g for g in _level_list(base, 1) if keep(g))
        return
    member = _BASES[base]
    for idx, parent in enumerate(_level_list(base, p - 1, mindeg - 1)):
        if idx % k == i:
            yield from (c for c in children(parent, member, _edge_cap(base, p), mindeg) if keep(c))


def enumerate_range(max_order: int, filters: Iterable[str] = (), min_order: int = 1) -> Iterator[Graph]:
    for p in range(min_order, max_order + 1):
        yield from enumerate_graphs(p, filters)


def clear_cache() -> None:
    _levels.clear()
