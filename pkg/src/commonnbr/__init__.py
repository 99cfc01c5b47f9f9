"""Common-neighbourhood spectra of planar graphs.

For a graph G and n >= 1, A_n(G) is the set of sizes of common
neighbourhoods over all n-sets of distinct vertices.  The package computes
these sets by brute force, predicts them from structure, and constructs
graphs with prescribed spectra.
"""

from .canon import certificate, is_isomorphic
from .classifier import (
    Classification,
    HypothesisError,
    classify_a2,
    classify_outerplanar_a2,
    predict_an,
    predict_profile,
    table1_row,
)
from .enumeration import enumerate_graphs
from .families import FamilySpec, Kind, construct_family, rclass_members, tclass_members
from .generators import A2Target, GenerationError, gen_a1, gen_a2, gen_a2_02, gen_a2_cone
from .graph import Graph, GraphError, Profile, Spectrum, a_set, common_neighbourhood, l_value, profile
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .oracle import VerificationReport, brute_profile, derive_s_graphs, verify_theorems
from .recognition import (
    Connectivity,
    FamilyLabel,
    connectivity_class,
    is_outerplanar,
    is_planar,
    is_polyhedron,
    recognize_families,
    recognize_family,
)

__all__ = [
    "A2Target", "Classification", "Connectivity", "FamilyLabel", "FamilySpec", "GenerationError",
    "Graph", "Graph6Error", "GraphError", "HypothesisError", "Kind", "Profile", "Spectrum",
    "VerificationReport", "a_set", "brute_profile", "certificate", "classify_a2",
    "classify_outerplanar_a2", "common_neighbourhood", "connectivity_class", "construct_family",
    "derive_s_graphs", "enumerate_graphs", "gen_a1", "gen_a2", "gen_a2_02", "gen_a2_cone",
    "is_isomorphic", "is_outerplanar", "is_planar", "is_polyhedron", "l_value", "parse_graph6",
    "predict_an", "predict_profile", "profile", "rclass_members", "recognize_families",
    "recognize_family", "table1_row", "tclass_members", "verify_theorems", "write_graph6",
]
