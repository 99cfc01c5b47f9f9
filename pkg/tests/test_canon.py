import itertools
import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from commonnbr.canon import CapabilityError, MAX_ORDER, canonical_graph, certificate, is_isomorphic, orbits
from commonnbr.families import complete_bipartite, construct_family, cycle, path, FamilySpec, Kind
from commonnbr.graph import Graph


@st.composite
def labelled_pair(draw, max_p=9):
    p = draw(st.integers(1, max_p))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(p, [e for e, k in zip(pairs, keep) if k])
    perm = draw(st.permutations(range(p)))
    return g, g.relabel(list(perm))


def brute_orbits(g):
    edges = set(g.edges())
    autos = [a for a in itertools.permutations(range(g.p))
             if all(tuple(sorted((a[u], a[v]))) in edges for u, v in edges)]
    return [min(a[v] for a in autos) for v in range(g.p)]


@settings(max_examples=400, deadline=None)
@given(labelled_pair())
def test_certificate_is_relabelling_invariant(pair):
    g, h = pair
    assert certificate(g) == certificate(h)
    assert canonical_graph(g) == canonical_graph(h)


@settings(max_examples=150, deadline=None)
@given(labelled_pair(max_p=6))
def test_orbits_match_brute_force(pair):
    g, _ = pair
    assert orbits(g) == brute_orbits(g)


def test_two_labellings_of_c5():
    assert certificate(cycle(5)) == certificate(cycle(5).relabel([0, 2, 4, 1, 3]))


def test_c5_vs_p5():
    assert certificate(cycle(5)) != certificate(path(5))


def test_equal_degree_sequences_distinguished():
    # Both have degree sequence 3,3,2,2,2,2 but only one is bipartite.
    a = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    b = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)])
    assert sorted(a.degrees()) == sorted(b.degrees())
    assert not is_isomorphic(a, b)


def test_k23_drawn_as_square_with_a_spike():
    # C_4 plus a vertex on two opposite corners is K_{2,3} again.
    other = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)])
    assert is_isomorphic(complete_bipartite(2, 3), other)
    assert not is_isomorphic(complete_bipartite(2, 3), cycle(5))


def test_order_limit():
    with pytest.raises(CapabilityError):
        certificate(Graph(MAX_ORDER + 1))


@pytest.mark.parametrize("g", [Graph(40), complete_bipartite(2, 30), construct_family(FamilySpec(Kind.B, 30))])
def test_symmetric_graphs_are_fast(g):
    start = time.perf_counter()
    certificate(g)
    assert time.perf_counter() - start < 10


def test_random_relabellings_of_a_medium_graph():
    rng = random.Random(7)
    g = Graph.from_edges(30, [(u, v) for u in range(30) for v in range(u + 1, 30) if rng.random() < 0.2])
    cert = certificate(g)
    for _ in range(5):
        perm = list(range(30))
        rng.shuffle(perm)
        assert certificate(g.relabel(perm)) == cert
