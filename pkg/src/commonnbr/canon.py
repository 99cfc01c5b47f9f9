"""Canonical labelling of small graphs.

Individualisation-refinement: the vertex partition is refined to an equitable
one, then a non-singleton cell is split by individualising each of its vertices
in turn.  Every leaf of the search tree is a vertex ordering; the canonical
ordering is the one whose relabelled adjacency is lexicographically largest.
Leaves that produce an identical relabelled graph reveal automorphisms, which
prune siblings lying in the same orbit of the pointwise stabiliser of the
current prefix.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph, bits

MAX_ORDER = 256


class CapabilityError(RuntimeError):
    """Input exceeds what this implementation supports."""


@dataclass(frozen=True)
class Labelling:
    order: tuple[int, ...]
    """``order[i]`` is the vertex placed at canonical position ``i``."""
    generators: tuple[tuple[int, ...], ...]
    """Automorphisms found during the search; they generate the full group."""

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    i = 0
    while i < len(cells):
        splitter = cells[i]
        out = []
        changed = False
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in bits(cell):
                k = (adj[v] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[k] for k in sorted(groups))
                changed = True
        if changed:
            cells = out
            i = 0
        else:
            i += 1
    return cells


def _orbit_roots(gens: list[tuple[int, ...]], p: int) -> list[int]:
    parent = list(range(p))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(p):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(p)]


def _twin_swaps(adj: Sequence[int], colours: Sequence[int] | None) -> list[tuple[int, ...]]:
    """Transpositions of vertices with equal open or closed neighbourhoods.

    These are automorphisms known in advance; seeding the search with them
    avoids exploring the factorial number of leaves a large twin class creates.
    """
    p = len(adj)
    swaps = []
    for closed in (0, 1):
        classes: dict[tuple[int, int], int] = {}
        for v in range(p):
            key = (adj[v] | (closed << v), colours[v] if colours is not None else 0)
            u = classes.get(key)
            if u is not None:
                perm = list(range(p))
                perm[u], perm[v] = v, u
                swaps.append(tuple(perm))
            classes[key] = v
    return swaps


def canonical_labelling(g: Graph, colours: Sequence[int] | None = None) -> Labelling:
    """Canonical vertex order of ``g`` (optionally respecting a vertex colouring)."""
    p = g.p
    if p > MAX_ORDER:
        raise CapabilityError(f"canonical labelling supports p <= {MAX_ORDER}, got {p}")
    if p == 0:
        return Labelling((), ())
    adj = g.adj
    if colours is None:
        cells = [(1 << p) - 1]
    else:
        by_colour: dict[int, int] = {}
        for v, c in enumerate(colours):
            by_colour[c] = by_colour.get(c, 0) | (1 << v)
        cells = [by_colour[c] for c in sorted(by_colour)]

    gens: list[tuple[int, ...]] = _twin_swaps(adj, colours)
    first: list = [None, None, None]  # order, form, individualised path
    best: list = [None, None, None]

    def leaf(cells: list[int], path: list[int]) -> int:
        # Returns the depth to unwind to (len(path) means no jump).
        order = [c.bit_length() - 1 for c in cells]
        pos = [0] * p
        for i, v in enumerate(order):
            pos[v] = i
        form = []
        for v in order:
            m = 0
            for u in bits(adj[v]):
                m |= 1 << pos[u]
            form.append(m)
        form = tuple(form)
        if first[0] is None:
            first[:] = order, form, list(path)
            best[:] = order, form, list(path)
            return len(path)
        for ref_order, ref_form, ref_path in (first, best):
            if form == ref_form:
                auto = [0] * p
                for a, b in zip(ref_order, order):
                    auto[a] = b
                gens.append(tuple(auto))
                # The subtree hanging below the divergence point is an image of
                # one already explored, so nothing below it can improve on best.
                k = 0
                while k < len(path) and k < len(ref_path) and path[k] == ref_path[k]:
                    k += 1
                return k
        if form > best[1]:
            best[:] = order, form, list(path)
        return len(path)

    def search(cells: list[int], prefix: list[int]) -> int:
        cells = _refine(adj, cells)
        if len(cells) == p:
            return leaf(cells, prefix)
        depth = len(prefix)
        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        tried: list[int] = []
        for v in bits(target):
            if tried:
                stab = [a for a in gens if all(a[x] == x for x in prefix)]
                if stab:
                    roots = _orbit_roots(stab, p)
                    if any(roots[v] == roots[t] for t in tried):
                        continue
            tried.append(v)
            one = 1 << v
            back = search(cells[:idx] + [one, target & ~one] + cells[idx + 1 :], prefix + [v])
            if back < depth:
                return back
        return depth

    search(cells, [])
    return Labelling(tuple(best[0]), tuple(gens))


def canonical_graph(g: Graph) -> Graph:
    pos = canonical_labelling(g).position()
    return g.relabel(pos)


def certificate(g: Graph) -> bytes:
    """Canonical byte string: graph6 of the canonically relabelled graph.

    Two graphs have equal certificates exactly when they are isomorphic.
    """
    from .graph6 import write_graph6

    return write_graph6(canonical_graph(g))


def orbits(g: Graph) -> list[int]:
    """Orbit representative (smallest member) of every vertex under Aut(g)."""
    return _orbit_roots(list(canonical_labelling(g).generators), g.p)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.p != h.p or g.q != h.q or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)
