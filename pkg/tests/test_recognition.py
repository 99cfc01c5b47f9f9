import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from commonnbr.canon import certificate
from commonnbr.families import (
    FamilySpec,
    Kind,
    complete,
    complete_bipartite,
    construct_family,
    cube,
    cycle,
    icosahedron,
    path,
    s_prime,
    sun3,
)
from commonnbr.graph import Graph
from commonnbr.recognition import (
    Connectivity,
    FamilyLabel,
    connectivity_class,
    is_outerplanar,
    is_planar,
    is_polyhedron,
    recognize_D,
    recognize_families,
    recognize_family,
    recognize_Q,
    recognize_R,
    recognize_T,
    to_networkx,
    vertex_connectivity_upto3,
)


def fam(kind, param=None, mask=None):
    return construct_family(FamilySpec(kind, param, mask))


@st.composite
def graphs(draw, max_p=10):
    p = draw(st.integers(1, max_p))
    density = draw(st.floats(0, 1))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    keep = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(p, [e for e, r in zip(pairs, keep) if r < density])


class TestPlanarity:
    @pytest.mark.parametrize("g,want", [
        (complete(4), True), (complete(5), False), (complete_bipartite(3, 3), False),
        (icosahedron(), True), (complete_bipartite(2, 9), True),
    ])
    def test_examples(self, g, want):
        assert is_planar(g) is want

    @settings(max_examples=300, deadline=None)
    @given(graphs())
    def test_agrees_with_networkx(self, g):
        assert is_planar(g) == nx.check_planarity(to_networkx(g))[0]

    @settings(max_examples=200, deadline=None)
    @given(graphs())
    def test_outerplanar_via_apex(self, g):
        h = to_networkx(g)
        h.add_edges_from(("apex", v) for v in range(g.p))
        assert is_outerplanar(g) == nx.check_planarity(h)[0]


class TestOuterplanar:
    @pytest.mark.parametrize("g", [path(6), Graph.from_edges(7, [(0, 1), (0, 2), (2, 3), (2, 4), (5, 6)])])
    def test_forests(self, g):
        assert is_outerplanar(g)

    @pytest.mark.parametrize("g", [complete(4), complete_bipartite(2, 3)])
    def test_forbidden(self, g):
        assert not is_outerplanar(g)

    def test_fan_and_sun(self):
        assert is_outerplanar(path(5).join(Graph(1)))
        assert is_outerplanar(sun3())
        assert not is_outerplanar(cycle(5).join(Graph(1)))


class TestConnectivity:
    @pytest.mark.parametrize("g,want", [
        (path(3), Connectivity.ONE), (cycle(4), Connectivity.TWO), (complete(4), Connectivity.THREE_PLUS),
        (Graph(3), Connectivity.DISCONNECTED), (Graph(1), Connectivity.DISCONNECTED),
        (complete_bipartite(2, 3), Connectivity.TWO), (icosahedron(), Connectivity.THREE_PLUS),
    ])
    def test_examples(self, g, want):
        assert connectivity_class(g) is want

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_p=9))
    def test_agrees_with_networkx(self, g):
        if g.p < 2 or not g.is_connected():
            return
        want = min(nx.node_connectivity(to_networkx(g)), 3)
        assert vertex_connectivity_upto3(g) == want

    @pytest.mark.parametrize("g,want", [
        (complete(4), True), (cycle(5), False), (fam(Kind.BPRIME, 5), True), (cube(), True),
        (complete_bipartite(2, 3), False), (complete(5), False),
    ])
    def test_polyhedron(self, g, want):
        assert is_polyhedron(g) is want


class TestT:
    def test_k4(self):
        t = recognize_T(complete(4))
        assert t.m == 2 and t.is_path and t.is_matching

    def test_triangular_bipyramid(self):
        t = recognize_T(fam(Kind.B, 3))
        assert t.m == 3 and t.is_path and not t.is_matching

    def test_bipyramid_b5_is_not_t(self):
        assert recognize_T(fam(Kind.B, 5)) is None

    @pytest.mark.parametrize("m", range(2, 9))
    def test_round_trip(self, m):
        assert FamilyLabel(Kind.T, m) in recognize_families(fam(Kind.T, m))

    @pytest.mark.parametrize("m", [2, 4, 6, 8])
    def test_tprime_round_trip(self, m):
        assert FamilyLabel(Kind.TPRIME, m) in recognize_families(fam(Kind.TPRIME, m))

    def test_tclass_with_mask(self):
        # P_5 keeping edges 0-1 and 2-3-4: neither the path nor a perfect matching.
        g = fam(Kind.TCLASS, 5, 0b1101)
        assert recognize_families(g)[0] == FamilyLabel(Kind.TCLASS, 5)


class TestQ:
    @pytest.mark.parametrize("g,want", [
        (fam(Kind.B, 4), 3), (fam(Kind.B, 6), 5), (fam(Kind.BPRIME, 4), None), (fam(Kind.BPRIME, 6), 5),
        (complete_bipartite(2, 3), 3), (cycle(4), None), (complete(4), None), (s_prime(), 3),
    ])
    def test_examples(self, g, want):
        assert recognize_Q(g) == want

    def test_non_planar_is_not_q(self):
        assert recognize_Q(complete_bipartite(3, 3)) is None


class TestOthers:
    def test_bowtie(self):
        bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        assert recognize_D(bowtie) == 2
        assert recognize_family(bowtie) == FamilyLabel(Kind.D, 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_d_round_trip(self, n):
        assert recognize_D(fam(Kind.D, n)) == n

    def test_sprime(self):
        assert recognize_family(s_prime()) == FamilyLabel(Kind.SPRIME)

    def test_fan_is_r(self):
        assert recognize_R(path(5).join(Graph(1))) == 5

    def test_wheel_is_not_r(self):
        # C_5 is not a subgraph of P_5, so the wheel lies outside the class.
        assert recognize_R(cycle(5).join(Graph(1))) is None

    @pytest.mark.parametrize("mask", [0b1111, 0b1011, 0b1101])
    def test_r_round_trip(self, mask):
        assert recognize_R(fam(Kind.RCLASS, 5, mask)) == 5

    @pytest.mark.parametrize("g,label", [
        (cube(), "cube"), (icosahedron(), "icosahedron"), (cycle(4), "Cycle_4"),
        (complete_bipartite(2, 3), "K2_3"), (fam(Kind.B, 5), "B_5"), (fam(Kind.BPRIME, 4), "Bprime_4"),
        (sun3(), "Sun_3"), (Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), "none"),
    ])
    def test_primary_label(self, g, label):
        assert str(recognize_family(g)) == label

    def test_labels_are_isomorphism_invariant(self):
        g = fam(Kind.TCLASS, 6, 0b11011)
        perm = [3, 5, 0, 7, 1, 6, 2, 4]
        assert recognize_families(g) == recognize_families(g.relabel(perm))
        assert certificate(g) == certificate(g.relabel(perm))
