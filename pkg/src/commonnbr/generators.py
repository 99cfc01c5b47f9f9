"""Seeded constructions realising prescribed spectra.

* ``gen_a2_cone``: a dominating vertex over an outerplanar graph without
  4-cycles; pairs through the apex see exactly the degrees of the base graph.
* ``gen_a2_02``: nested complete bipartite pieces; each block hung on a twin
  pair raises that pair's common neighbourhood to a target value.
* ``gen_a1``: a caterpillar whose leaves are closed up by a matching, a cycle,
  or a cycle plus caps so that every leaf reaches the minimum degree.

Every output is checked by brute force before it is returned; a failed check
raises ``GenerationError`` rather than returning a wrong graph.

The degree-5 cap used by ``gen_a1`` on each run of ten consecutive cycle
vertices ``c_1 .. c_10`` adds a ring ``r_1 .. r_10`` (a 10-cycle), joins
``c_i`` to ``r_i`` and ``r_{i+1}`` (indices mod 10), and adds two hubs: ``x``
joined to ``r_1 .. r_5`` and ``y`` joined to ``r_6 .. r_10``.  Every ring
vertex then has degree 2 + 2 + 1 = 5, both hubs have degree 5, and each
``c_i`` gains 2 on top of its degree 3 from the tree and the cycle.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

from .graph import Graph, a_set
from .recognition import is_outerplanar, is_planar, vertex_connectivity_upto3

SEED_LIMIT = 1 << 64
MAX_02_ORDER = 200
BASES = {"12": frozenset({1, 2}), "012": frozenset({0, 1, 2}), "02": frozenset({0, 2})}


class GenerationError(ValueError):
    """Target outside the constructible range, or an internal check failed."""


@dataclass(frozen=True)
class A2Target:
    base: frozenset[int]
    aprime: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        object.__setattr__(self, "aprime", frozenset(self.aprime))
        if self.base not in BASES.values():
            raise GenerationError(f"base must be one of {{1,2}}, {{0,1,2}}, {{0,2}}; got {set(self.base)}")
        if any(a < 3 for a in self.aprime):
            raise GenerationError(f"extra values must be >= 3, got {sorted(self.aprime)}")
        if self.base == BASES["02"] and self.aprime in (frozenset(), frozenset({3})):
            raise GenerationError("the base {0,2} needs extra values other than {} and {3}")

    @property
    def spectrum(self) -> frozenset[int]:
        return self.base | self.aprime

    @classmethod
    def parse(cls, base: str, aprime: str | Iterable[int]) -> A2Target:
        key = "".join(ch for ch in base if ch.isdigit())
        if key not in BASES:
            raise GenerationError(f"unknown base {base!r}; use 12, 012 or 02")
        if isinstance(aprime, str):
            aprime = [int(x) for x in aprime.replace(",", " ").split()]
        return cls(BASES[key], frozenset(aprime))


def _rng(seed: int) -> random.Random:
    if not 0 <= seed < SEED_LIMIT:
        raise GenerationError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return random.Random(seed)


def _check(g: Graph, n: int, want: frozenset[int], what: str) -> Graph:
    got = a_set(g, n)
    if got != want:
        raise GenerationError(f"{what}: A_{n} came out as {sorted(got)}, expected {sorted(want)}")
    if not g.is_connected():
        raise GenerationError(f"{what}: output is disconnected")
    if not is_planar(g):
        raise GenerationError(f"{what}: output is not planar")
    return g


# -- cones ----------------------------------------------------------------


def _prufer_tree(internal: list[int], rng: random.Random) -> list[tuple[int, int]]:
    """Random tree whose non-leaf vertices have exactly the degrees ``internal``."""
    # Vertex v appears deg(v) - 1 times in a Pruefer sequence; leaves never do.
    seq = [v for v, d in enumerate(internal) for _ in range(d - 1)]
    rng.shuffle(seq)
    return list(nx.from_prufer_sequence(seq).edges())


def _cone_base(target: A2Target, rng: random.Random) -> tuple[int, list[tuple[int, int]]]:
    edges: list[tuple[int, int]] = []
    p = 0

    def add_path(k: int):
        nonlocal p
        edges.extend((p + i, p + i + 1) for i in range(k - 1))
        p += k

    def add_cycle(k: int):
        nonlocal p
        edges.extend((p + i, p + (i + 1) % k) for i in range(k))
        p += k

    if target.aprime:
        internal = list(target.aprime)
        internal += [rng.choice(sorted(target.aprime)) for _ in range(rng.randint(0, 6))]
        internal += [2] * rng.randint(0, 8)
        rng.shuffle(internal)
        tree = _prufer_tree(internal, rng)
        edges.extend(tree)
        p = max(max(e) for e in tree) + 1
        extras = rng.randint(0, 3)
    else:
        # Degrees stay <= 2: paths and cycles of length other than 4.
        extras = rng.randint(1, 3)
        add_path(rng.randint(3, 7))
    for _ in range(extras):
        if rng.random() < 0.5:
            add_path(rng.randint(2, 6))
        else:
            add_cycle(rng.choice([3, 5, 6, 7, 8]))
    if target.base == BASES["012"]:
        p += rng.randint(1, 2)
    return p, edges


def gen_a2_cone(target: A2Target, seed: int) -> Graph:
    """Apex over an outerplanar base; A_2 = base set plus the base graph's large degrees."""
    if target.base == BASES["02"]:
        raise GenerationError("the cone construction covers the bases {1,2} and {0,1,2}; use gen_a2_02")
    rng = _rng(seed)
    for _ in range(64):
        p, edges = _cone_base(target, rng)
        base = Graph.from_edges(p, edges)
        if not base.p or a_set(base, 2) - {0, 1} or not is_outerplanar(base):
            continue
        g = base.join(Graph(1))
        if a_set(g, 2) == target.spectrum:
            return _check(g, 2, target.spectrum, "cone")
    raise GenerationError(f"no cone realisation found for {sorted(target.spectrum)}")


# -- nested bipartite blocks -------------------------------------------------


def gen_a2_02(aprime: Iterable[int], seed: int, extra_steps: int | None = None) -> Graph:
    """Chain of K_{2,a} blocks realising A_2 = {0,2} together with ``aprime``.

    After the chain, each extra step hangs a block of new, mutually twin
    vertices on a set S: either a non-adjacent twin pair whose common
    neighbourhood grows to a target value, or the union of two such pairs.
    A step is kept only if the graph stays planar and A_2 stays inside the
    target.  Pairs carrying the chain's values are never extended, so every
    target value survives.
    """
    target = A2Target(BASES["02"], frozenset(aprime))
    rng = _rng(seed)
    values = sorted(target.aprime)
    want = target.spectrum
    nbrs: list[set[int]] = [set(), set()]
    locked = {(0, 1)}

    def attach(support, count: int) -> list[int]:
        block = list(range(len(nbrs), len(nbrs) + count))
        for w in block:
            nbrs.append(set(support))
            for u in support:
                nbrs[u].add(w)
        return block

    def detach(support, block: list[int]) -> None:
        for u in support:
            nbrs[u].difference_update(block)
        del nbrs[block[0]:]

    group = attach((0, 1), values[0])
    for a in values[1:]:
        locked.add((group[0], group[1]))
        group = attach((group[0], group[1]), a - 2)

    # The vertex budget fixes the size; inherited pair weights make branches
    # grow unevenly, so both the shape and the size vary with the seed.
    budget = len(nbrs) + rng.randint(0, 150) if extra_steps is None else MAX_02_ORDER
    steps = 4 * MAX_02_ORDER if extra_steps is None else extra_steps
    weight: dict[tuple[int, int], float] = {}
    for _ in range(steps):
        if len(nbrs) >= budget:
            break
        classes: dict[frozenset[int], list[int]] = {}
        for v, nb in enumerate(nbrs):
            classes.setdefault(frozenset(nb), []).append(v)
        pairs = [
            (u, v)
            for nb, members in classes.items()
            if len(nb) < values[-1]
            for i, u in enumerate(members)
            for v in members[i + 1:]
            if (u, v) not in locked
        ]
        if not pairs:
            break
        for pr in pairs:
            weight.setdefault(pr, rng.random())
        u, v = rng.choices(pairs, [weight[pr] for pr in pairs])[0]
        c = len(nbrs[u])
        support: tuple[int, ...] = (u, v)
        count = rng.choice([a for a in values if a > c]) - c
        if rng.random() < 0.25:
            other = [pr for pr in pairs if not {u, v} & set(pr)]
            if other:
                support = (u, v) + rng.choice(other)
                count = rng.randint(1, 3)
        if len(nbrs) + count > MAX_02_ORDER:
            continue
        block = attach(support, count)
        if not _local_pairs_ok(nbrs, support, block, want) or not is_planar(_from_sets(nbrs)):
            detach(support, block)
            continue
        for i in range(0, len(block) - 1, 2):
            weight[(block[i], block[i + 1])] = weight[(u, v)]

    g = _from_sets(nbrs)
    perm = list(range(g.p))
    rng.shuffle(perm)
    return _check(g.relabel(perm), 2, want, "nested blocks")


def _local_pairs_ok(nbrs: list[set[int]], support, block: list[int], want: frozenset[int]) -> bool:
    """Pairs whose common neighbourhood changed: those inside the support and those touching the block."""
    s = set(support)
    for i, u in enumerate(support):
        for v in support[i + 1:]:
            if len(nbrs[u] & nbrs[v]) not in want:
                return False
    new = set(block)
    for x in range(len(nbrs)):
        if x in new:
            continue
        k = len(nbrs[x] & s)
        # A block vertex sees exactly N(x) within the support.
        if k not in want:
            return False
    # Block vertices are twins of each other: they share the whole support.
    return len(block) < 2 or len(s) in want


def _from_sets(nbrs: list[set[int]]) -> Graph:
    return Graph.from_edges(len(nbrs), [(u, v) for u, nb in enumerate(nbrs) for v in nb if u < v])


def gen_a2(target: A2Target, seed: int) -> Graph:
    if target.base == BASES["02"]:
        return gen_a2_02(target.aprime, seed)
    return gen_a2_cone(target, seed)


# -- prescribed degree sets ---------------------------------------------------


def _caterpillar(
    spine: list[int], rng: random.Random
) -> tuple[list[tuple[int, int]], list[int], int, list[list[int]]]:
    """Caterpillar with the given spine degrees; returns edges, the leaves in
    boundary order of a plane drawing, the vertex count and each spine vertex's leaves."""
    s = len(spine)
    edges = [(i, i + 1) for i in range(s - 1)]
    p = s
    left: list[int] = []
    top: list[int] = []
    bottom: list[int] = []
    right: list[int] = []
    groups: list[list[int]] = []
    for i, d in enumerate(spine):
        k = d - (0 if s == 1 else 1 if i in (0, s - 1) else 2)
        own = list(range(p, p + k))
        groups.append(own)
        p += k
        edges.extend((i, leaf) for leaf in own)
        if i == 0:
            left = own
        elif i == s - 1:
            right = own
        else:
            cut = rng.randint(0, k)
            top.extend(own[:cut])
            bottom = own[cut:][::-1] + bottom
    # Walk around the drawing: first end, top side, far end, bottom side back.
    order = left + top + right + bottom
    return edges, order, p, groups


def _spine(degrees: list[int], a: int, rng: random.Random) -> list[int]:
    spine = [d for d in degrees if d >= 2] or [2]
    pool = sorted(set(spine))
    spine += [rng.choice(pool) for _ in range(rng.randint(0, 3))]
    odd = [d for d in pool if d % 2]
    if a in (2, 4) and sum(d % 2 for d in spine) % 2:
        spine.append(rng.choice(odd))
    leaves = 2 + sum(d - 2 for d in spine)
    if a == 4 and leaves % 4 == 2:
        spine.append(4)
    if a == 5:
        while (2 + sum(d - 2 for d in spine)) % 10:
            spine.append(5)
    rng.shuffle(spine)
    return spine


def gen_a1(degrees: Iterable[int], seed: int) -> Graph:
    """Planar connected graph whose set of vertex degrees is exactly ``degrees``."""
    want = frozenset(degrees)
    if not want or min(want) < 1:
        raise GenerationError(f"degrees must be positive integers, got {sorted(want)}")
    a = min(want)
    if a > 5:
        raise GenerationError(f"a planar graph has a vertex of degree at most 5; minimum {a} is infeasible")
    rng = _rng(seed)
    if want == {1}:
        return _check(Graph.from_edges(2, [(0, 1)]), 1, want, "degree set")
    spine = _spine(sorted(want), a, rng)
    edges, ring, p, groups = _caterpillar(spine, rng)
    if a == 2:
        # Sibling leaves close into triangles below the spine; the odd leaves
        # left over are joined in spine order above it, so nothing is enclosed.
        odd = []
        for own in groups:
            own = own[:]
            rng.shuffle(own)
            if len(own) % 2:
                odd.append(own.pop())
            edges += [(own[i], own[i + 1]) for i in range(0, len(own), 2)]
        edges += [(odd[i], odd[i + 1]) for i in range(0, len(odd), 2)]
    elif a >= 3:
        edges += [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
        shift = rng.randrange(len(ring))
        ring = ring[shift:] + ring[:shift]
        if a == 4:
            for k in range(0, len(ring), 4):
                edges += [(p, c) for c in ring[k:k + 4]]
                p += 1
        if a == 5:
            for k in range(0, len(ring), 10):
                cs = ring[k:k + 10]
                rs = list(range(p, p + 10))
                x, y = p + 10, p + 11
                p += 12
                edges += [(rs[i], rs[(i + 1) % 10]) for i in range(10)]
                edges += [(cs[i], rs[i]) for i in range(10)]
                edges += [(cs[i], rs[(i + 1) % 10]) for i in range(10)]
                edges += [(x, r) for r in rs[:5]] + [(y, r) for r in rs[5:]]
    g = Graph.from_edges(p, edges)
    _check(g, 1, want, "degree set")
    if a >= 3 and vertex_connectivity_upto3(g) < 3:
        raise GenerationError("closing construction is not 3-connected")
    if a <= 2 and not is_outerplanar(g):
        raise GenerationError("closing construction is not outerplanar")
    return g
