"""Predict common-neighbourhood spectra of planar graphs from their structure.

The predictors never enumerate vertex tuples; they read off the answer from
the order, maximum degree, the largest pair neighbourhood ``L`` and family
membership.  The oracle module checks them against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .canon import certificate
from .families import Kind, s_graph_table, sun3
from .graph import Graph, Spectrum, a_set, l_value, union_spectrum
from .recognition import (
    NONE,
    FamilyLabel,
    connectivity_class,
    is_outerplanar,
    is_planar,
    recognize_D,
    recognize_families,
    recognize_Q,
    recognize_R,
    recognize_T,
)


class HypothesisError(ValueError):
    """The input graph is outside the class the classification covers."""


@dataclass(frozen=True)
class Classification:
    branch: str
    predicted: Spectrum | tuple[Spectrum, ...]
    family: FamilyLabel = NONE
    evidence: dict = field(default_factory=dict, compare=False)
    member: FamilyLabel | None = None
    consistent: bool = True
    """False when the structure contradicts the table row (a counterexample)."""


def _evidence(g: Graph) -> dict:
    return {
        "p": g.p,
        "q": g.q,
        "max_degree": g.max_degree(),
        "L": l_value(g),
        "connectivity": str(connectivity_class(g)) if g.p else "disconnected",
        "planar": True,
        "outerplanar": is_outerplanar(g),
    }


def _require_planar(g: Graph) -> None:
    if not is_planar(g):
        raise HypothesisError("graph is not planar")


@lru_cache(maxsize=1)
def _exceptional() -> dict[bytes, int]:
    from .graph6 import parse_graph6

    table = s_graph_table()
    return {certificate(parse_graph6(table[k])): k for k in (5, 7) if k in table}


def _s_exception(g: Graph) -> int | None:
    exc = _exceptional()
    if g.p not in (7, 8) or g.q != 3 * g.p - 6:
        return None
    return exc.get(certificate(g))


def _is_k4(g: Graph) -> bool:
    return g.p == 4 and g.q == 6


def _label(g: Graph) -> FamilyLabel:
    labels = recognize_families(g)
    return labels[0] if labels else NONE


def predict_an(g: Graph, n: int) -> Classification:
    """A_n(g) for planar g and n >= 3, read off from structure."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    _require_planar(g)
    ev = _evidence(g)

    def out(branch: str, values) -> Classification:
        return Classification(branch, Spectrum(n, values), _label(g), ev)

    if n == 3:
        if _is_k4(g):
            return out("K4", {1})
        t = recognize_T(g)
        if t is not None and t.m >= 3:
            return out("T", {1, 2})
        if _s_exception(g) is not None:
            return out("S", {1, 2})
    if g.p < n:
        return out("order<n", ())
    if ev["max_degree"] < n:
        return out("maxdeg<n", {0})
    qm = recognize_Q(g)
    if qm is not None and qm <= n:
        return out("Q", {0, 2})
    if n <= ev["L"]:
        return out("K2n", {0, 1, 2})
    return out("otherwise", {0, 1})


def predict_profile(g: Graph) -> Classification:
    """The sequence A_3, ..., A_p for planar g (empty beyond p)."""
    _require_planar(g)
    ev = _evidence(g)
    p, delta, ell = g.p, ev["max_degree"], ev["L"]
    label = _label(g)

    def seq(branch: str, rows: list[set[int]]) -> Classification:
        return Classification(branch, tuple(Spectrum(n, r) for n, r in enumerate(rows, 3)), label, ev)

    if _is_k4(g):
        return seq("K4", [{1}, {0}])
    s = _s_exception(g)
    if s is not None:
        return seq(f"S{s}", [{1, 2}, {0, 1, 2}, {0, 1}, {0, 1}] + [{0}] * (p - 6))
    t = recognize_T(g)
    if t is not None and t.m >= 3:
        m = t.m
        return seq("T", [{1, 2}] + [{0, 1, 2}] * (m - 3) + [{0, 1}, {0}])
    qm = recognize_Q(g)
    if qm is not None:
        rows = [{0, 1, 2} if n < qm else {0, 2} if n <= delta else {0} for n in range(3, p + 1)]
        return seq("Q", rows)
    rows = [{0, 1, 2} if n <= ell else {0, 1} if n <= delta else {0} for n in range(3, p + 1)]
    return seq("generic", rows)


# -- pairs ---------------------------------------------------------------

FINITE_ROWS: dict[str, tuple[str, ...]] = {
    "{}": ("K1",),
    "{0}": ("K2",),
    "{2}": ("K4",),
    "{2,3}": ("T_3", "S_3"),
    "{2,4}": ("B_4", "Tprime_4"),
    "{2,l}": ("Tprime_l",),
    "{2,3,4}": ("T_4", "S_5", "S_6", "S_7", "S_8", "S_9"),
    "{2,3,l}": ("B_l", "T-class_l but not Tprime_l"),
    "{0,2}": ("cube", "icosahedron", "Cycle_4"),
    "{0,2,3}": ("S_4", "K2_3", "Sprime"),
    "{1}": ("D_l",),
    "{0,1}": ("no 4-cycle, not D_l, K1, K2",),
}
INFINITE_ROWS = ("{0,2}+A'", "{1,2}+A'", "{0,1,2}+A'")


def table1_row(a2: frozenset[int]) -> tuple[str, int | None]:
    """Row of the planar connected table containing the set ``a2`` and its parameter l."""
    a2 = frozenset(a2)
    big = sorted(x for x in a2 if x >= 3)
    small = a2 - set(big)
    if not a2:
        return "{}", None
    if a2 == {0}:
        return "{0}", None
    if a2 == {1}:
        return "{1}", None
    if a2 == {0, 1}:
        return "{0,1}", None
    if small == {0, 2}:
        if not big:
            return "{0,2}", None
        if big == [3]:
            return "{0,2,3}", None
        return "{0,2}+A'", None
    if small == {1, 2}:
        return "{1,2}+A'", None
    if small == {0, 1, 2}:
        return "{0,1,2}+A'", None
    if small == {2}:
        if not big:
            return "{2}", None
        if big == [3]:
            return "{2,3}", None
        if big == [4]:
            return "{2,4}", None
        if len(big) == 1 and big[0] % 2 == 0:
            return "{2,l}", big[0]
        if big == [3, 4]:
            return "{2,3,4}", None
        if len(big) == 2 and big[0] == 3:
            return "{2,3,l}", big[1]
    return "unlisted", None


def has_4_cycle(g: Graph) -> bool:
    """Walk-based search for a cycle a-b-c-d-a on four distinct vertices."""
    nb = [g.neighbours(v) for v in range(g.p)]
    for a in range(g.p):
        for b in nb[a]:
            for c in nb[b]:
                if c == a:
                    continue
                for d in nb[c]:
                    if d not in (a, b) and a in nb[d]:
                        return True
    return False


def _row_member(row: str, ell: int | None, g: Graph, labels: list[FamilyLabel]) -> FamilyLabel | None:
    names = {str(lab) for lab in labels}
    kinds = {lab.kind: lab for lab in labels}
    if row == "{}":
        return FamilyLabel(Kind.PATH, 1) if g.p == 1 else None
    if row == "{0}":
        return FamilyLabel(Kind.PATH, 2) if g.p == 2 and g.q == 1 else None
    if row == "{2}":
        return FamilyLabel(Kind.T, 2) if _is_k4(g) else None
    if row == "{1}":
        return kinds.get(Kind.D)
    if row == "{0,1}":
        if has_4_cycle(g) or Kind.D in kinds or g.p <= 2:
            return None
        return NONE
    wanted = {
        "{2,3}": ["T_3", "S_3"],
        "{2,4}": ["B_4", "Tprime_4"],
        "{2,l}": [f"Tprime_{ell}"],
        "{2,3,4}": ["T_4", "S_5", "S_6", "S_7", "S_8", "S_9"],
        "{2,3,l}": [f"B_{ell}", f"T_{ell}", f"Tclass_{ell}"],
        "{0,2}": ["cube", "icosahedron", "Cycle_4"],
        "{0,2,3}": ["S_4", "K2_3", "Sprime"],
    }[row]
    for w in wanted:
        if w in names:
            return next(lab for lab in labels if str(lab) == w)
    return None


def _row_of_member(label: FamilyLabel) -> str | None:
    """Row that the table assigns to a named finite member, if any."""
    k, x = label.kind, label.param
    if k is Kind.S:
        return {3: "{2,3}", 4: "{0,2,3}"}.get(x, "{2,3,4}")
    if k is Kind.SPRIME:
        return "{0,2,3}"
    if k in (Kind.CUBE, Kind.ICOSAHEDRON):
        return "{0,2}"
    if k is Kind.CYCLE and x == 4:
        return "{0,2}"
    if k is Kind.K2 and x == 3:
        return "{0,2,3}"
    if k is Kind.D:
        return "{1}"
    if k is Kind.TPRIME:
        return {2: "{2}", 4: "{2,4}"}.get(x, "{2,l}")
    if k is Kind.T:
        return {2: "{2}", 3: "{2,3}", 4: "{2,3,4}"}.get(x, "{2,3,l}")
    if k is Kind.TCLASS:
        return "{2,3,l}" if x >= 5 else "{2,3,4}"
    if k is Kind.B:
        return {3: "{2,3}", 4: "{2,4}"}.get(x, "{2,3,l}")
    return None


def classify_a2(g: Graph) -> Classification:
    """Row of the planar connected A_2 table, with the identified member on finite rows."""
    _require_planar(g)
    if not g.is_connected():
        raise HypothesisError("graph is not connected")
    a2 = a_set(g, 2)
    row, ell = table1_row(a2)
    labels = recognize_families(g)
    label = labels[0] if labels else NONE
    ev = _evidence(g)
    ev["row_param"] = ell
    consistent = row != "unlisted"
    member = None
    if row in FINITE_ROWS:
        member = _row_member(row, ell, g, labels)
        consistent = member is not None
    for lab in labels:
        claimed = _row_of_member(lab)
        if claimed is not None and claimed != row:
            consistent = False
    return Classification(row, a2, label, ev, member, consistent)


def classify_outerplanar_a2(g: Graph) -> Classification:
    """Predict A_2 of a connected outerplanar graph from structure alone."""
    if not is_outerplanar(g):
        raise HypothesisError("graph is not outerplanar")
    if not g.is_connected():
        raise HypothesisError("graph is not connected")
    ev = _evidence(g)
    p = g.p
    if p == 1:
        row, pred, member = "{}", set(), FamilyLabel(Kind.PATH, 1)
    elif p == 2:
        row, pred, member = "{0}", {0}, FamilyLabel(Kind.PATH, 2)
    elif recognize_D(g) is not None:
        row, pred, member = "{1}", {1}, FamilyLabel(Kind.D, recognize_D(g))
    elif not has_4_cycle(g):
        row, pred, member = "{0,1}", {0, 1}, None
    elif p == 4 and g.q == 4 and set(g.degrees()) == {2}:
        row, pred, member = "{0,2}", {0, 2}, FamilyLabel(Kind.CYCLE, 4)
    elif recognize_R(g) is not None:
        row, pred, member = "{1,2}", {1, 2}, FamilyLabel(Kind.RCLASS, recognize_R(g))
    elif p == 6 and certificate(g) == certificate(sun3()):
        # Two-connected, no dominating vertex, yet every pair shares 1 or 2
        # neighbours; the only such graph up to order 10.
        row, pred, member = "{1,2}", {1, 2}, FamilyLabel(Kind.SUN, 3)
    else:
        row, pred, member = "{0,1,2}", {0, 1, 2}, None
    return Classification(row, Spectrum(2, pred), _label(g), ev, member)


def predict_an_components(g: Graph, n: int) -> Spectrum:
    """A_n of a possibly disconnected planar graph, combining per-component predictions."""
    _require_planar(g)
    comps = g.components()
    if len(comps) <= 1:
        return predict_an(g, n).predicted
    parts = []
    for c in comps:
        h = g.induced(i for i in range(g.p) if c >> i & 1)
        parts.append(predict_an(h, n).predicted)
    return union_spectrum(n, parts, g.p)
