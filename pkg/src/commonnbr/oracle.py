"""Ground truth and verification sweeps.

``brute_profile`` recomputes every spectrum with plain Python sets, sharing no
code with the bit-mask implementation.  ``verify_theorems`` runs the
classification claims over a corpus and tallies checked / skipped /
mismatching graphs; reports from disjoint corpora merge by addition.
"""

from __future__ import annotations

import hashlib
import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from pathlib import Path

from .canon import certificate
from .classifier import (
    classify_a2,
    classify_outerplanar_a2,
    has_4_cycle,
    predict_an,
    predict_profile,
)
from .enumeration import enumerate_graphs
from .families import Kind, S_GRAPH_FILE, construct_family, FamilySpec
from .graph import Graph, Profile, a_set
from .graph6 import parse_graph6, write_graph6
from .recognition import (
    connectivity_class,
    Connectivity,
    is_outerplanar,
    is_planar,
    is_polyhedron,
    recognize_D,
    recognize_families,
    recognize_Q,
    recognize_T,
)


def brute_profile(g: Graph) -> Profile:
    """Every A_n by explicit set intersection over all n-subsets."""
    nbrs = [set(g.neighbours(v)) for v in range(g.p)]
    spectra: dict[int, set[int]] = {}
    for n in range(1, g.p + 1):
        vals = set()
        for combo in combinations(range(g.p), n):
            common = set(range(g.p))
            for v in combo:
                common &= nbrs[v]
            vals.add(len(common))
        spectra[n] = vals
    return Profile(g.p, spectra)


# -- derived S-graphs -----------------------------------------------------


class DerivationError(RuntimeError):
    pass


def derive_s_graphs(max_order: int = 9, log=None) -> dict[str, bytes]:
    """Recover S_3 .. S_9 by exhaustive search; returns name -> canonical graph6.

    Raises ``DerivationError`` naming the graphs not found within ``max_order``.
    S_6, S_8, S_9 are indistinguishable by the defining property, so they are
    named in order of (order, canonical graph6).
    """
    if max_order < 8:
        raise DerivationError(f"max_order must be at least 8, got {max_order}")
    say = log or (lambda msg: None)
    found: dict[str, bytes] = {}

    for p, name in ((7, "S5"), (8, "S7")):
        hits = [g for g in enumerate_graphs(p, ["triangulation"])
                if 0 not in a_set(g, 3) and recognize_T(g) is None]
        if len(hits) != 1:
            raise DerivationError(f"expected one exceptional triangulation on {p} vertices, got {len(hits)}")
        found[name] = certificate(hits[0])
        say(f"{name}: order {p}")

    t3 = certificate(construct_family(FamilySpec(Kind.T, 3)))
    t4 = certificate(construct_family(FamilySpec(Kind.T, 4)))
    s3: list[bytes] = []
    s4: list[bytes] = []
    s689: list[tuple[int, bytes]] = []
    for p in range(3, max_order + 1):
        # Only p <= 9 is affordable for all connected planar graphs; beyond that the
        # search for S_3 is limited to polyhedra.
        if p <= 9:
            for g in enumerate_graphs(p, ["planar", "connected"]):
                a2 = a_set(g, 2)
                if a2 == {2, 3} and certificate(g) != t3:
                    s3.append(certificate(g))
        for g in enumerate_graphs(p, ["polyhedral"], max_order=max(max_order, 9)):
            a2 = a_set(g, 2)
            if a2 == {0, 2, 3}:
                s4.append(certificate(g))
            elif a2 == {2, 3, 4}:
                c = certificate(g)
                if c not in (t4, found["S5"], found["S7"]):
                    s689.append((p, c))
            elif p > 9 and a2 == {2, 3}:
                s3.append(certificate(g))
        say(f"order {p}: S3 {len(s3)}, S4 {len(s4)}, S6/S8/S9 {len(s689)}")
    missing = []
    if len(s3) == 1:
        found["S3"] = s3[0]
    else:
        missing.append(f"S3 ({len(s3)} candidates)")
    if len(s4) == 1:
        found["S4"] = s4[0]
    else:
        missing.append(f"S4 ({len(s4)} candidates)")
    if len(s689) == 3:
        for name, (_, c) in zip(("S6", "S8", "S9"), sorted(s689)):
            found[name] = c
    else:
        missing.append(f"S6/S8/S9 ({len(s689)} candidates)")
    if missing:
        err = DerivationError(f"not determined within order {max_order}: {', '.join(missing)}; "
                              "increase max_order")
        err.partial = dict(found)
        raise err
    return dict(sorted(found.items()))


def s_table_lines(graphs: dict[str, bytes]) -> list[str]:
    """Lines of the committed table: name, order, canonical graph6, sha-256 of the first three fields."""
    lines = []
    for name in sorted(graphs, key=lambda s: int(s[1:])):
        g6 = graphs[name].decode()
        body = f"{name}\t{parse_graph6(g6).p}\t{g6}"
        lines.append(f"{body}\t{hashlib.sha256(body.encode()).hexdigest()}")
    return lines


def write_s_table(graphs: dict[str, bytes], path: str | Path | None = None) -> Path:
    if path is None:
        path = Path(__file__).parent / "data" / S_GRAPH_FILE
    path = Path(path)
    path.write_text("\n".join(s_table_lines(graphs)) + "\n")
    return path


# -- verification ----------------------------------------------------------

CHECKS = ("thm1", "thm2", "thm3", "table2", "polyhedra",
          "no0", "no03", "02", "2", "4cy", "01", "1", "exc", "023")
ALIASES = {"outerplanar": "table2", "all": None}


@dataclass
class Tally:
    checked: int = 0
    mismatches: int = 0
    skipped: int = 0

    def __add__(self, other: Tally) -> Tally:
        return Tally(self.checked + other.checked, self.mismatches + other.mismatches,
                     self.skipped + other.skipped)


@dataclass
class VerificationReport:
    corpus: str = ""
    tallies: dict[str, Tally] = field(default_factory=dict)
    counterexamples: list[tuple[str, str]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def mismatches(self) -> int:
        return sum(t.mismatches for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def merge(self, other: VerificationReport) -> VerificationReport:
        names = sorted(set(self.tallies) | set(other.tallies))
        tallies = {k: self.tallies.get(k, Tally()) + other.tallies.get(k, Tally()) for k in names}
        parts = sorted({c for c in (self.corpus, other.corpus) if c})
        return VerificationReport("; ".join(parts), tallies,
                                  sorted(self.counterexamples + other.counterexamples),
                                  self.wall_time + other.wall_time)

    __add__ = merge

    def as_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "checks": {k: vars(t) for k, t in sorted(self.tallies.items())},
            "mismatches": self.mismatches,
            "counterexamples": [{"check": c, "graph6": g} for c, g in self.counterexamples],
            "wall_time": round(self.wall_time, 3),
        }


def _selected(which: Iterable[str] | None) -> list[str]:
    if which is None:
        return list(CHECKS)
    out = []
    for w in which:
        w = ALIASES.get(w, w)
        if w is None:
            return list(CHECKS)
        if w not in CHECKS:
            raise ValueError(f"unknown check {w!r}; choose from {', '.join(CHECKS)}")
        if w not in out:
            out.append(w)
    return out


class _Facts:
    """Lazily computed quantities shared by the checks for one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: dict = {}

    def get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def planar(self) -> bool:
        return self.get("planar", lambda: is_planar(self.g))

    @property
    def connected(self) -> bool:
        return self.get("connected", self.g.is_connected)

    @property
    def prof(self) -> Profile:
        return self.get("prof", lambda: brute_profile(self.g))

    @property
    def labels(self):
        return self.get("labels", lambda: recognize_families(self.g))

    @property
    def kappa(self):
        return self.get("kappa", lambda: connectivity_class(self.g))


def _exceptional_pair_members(f: _Facts) -> bool:
    names = {lab.kind for lab in f.labels}
    return bool(names & {Kind.T, Kind.TPRIME, Kind.TCLASS, Kind.B, Kind.S})


def _check(name: str, f: _Facts) -> bool | None:
    """True = holds, False = counterexample, None = graph outside the hypotheses."""
    g = f.g
    if g.p == 0:
        return None
    if name not in ("table2",) and not f.planar:
        return None
    A = f.prof
    if name == "thm1":
        return all(predict_an(g, n).predicted == A[n] for n in range(3, g.p + 1))
    if name == "thm2":
        return list(predict_profile(g).predicted) == A.from_three()
    if name == "thm3":
        if not f.connected:
            return None
        cls = classify_a2(g)
        if not cls.consistent or cls.predicted != A[2]:
            return False
        if has_4_cycle(g) and not _exceptional_pair_members(f):
            return 2 in A[2] and bool(A[2] & {0, 1})
        return True
    if name == "table2":
        if not (f.connected and is_outerplanar(g)):
            return None
        return classify_outerplanar_a2(g).predicted == A[2] and A[2] <= {0, 1, 2}
    if name == "polyhedra":
        if not is_polyhedron(g):
            return None
        qm = recognize_Q(g)
        if qm is None:
            return True
        allowed = {f"B_{ell}" for ell in range(5, g.p)} | {f"Bprime_{ell}" for ell in range(5, g.p)}
        names = {str(lab) for lab in f.labels}
        return (qm == 3 and "B_4" in names) or (qm == 5 and bool(names & allowed))
    if name == "no0":
        return all(0 in A[n] for n in range(4, g.p + 1) if A[n])
    if name == "no03":
        if g.p < 3:
            return None
        if 0 in A[3]:
            return True
        names = {str(lab) for lab in f.labels}
        t = recognize_T(g)
        return t is not None or bool(names & {"S_5", "S_7"})
    if name == "02":
        for n in range(3, g.p + 1):
            if A[n] == {0, 2}:
                qm = recognize_Q(g)
                if qm is None or qm > n:
                    return False
        return True
    if name == "2":
        if any(a >= 3 for a in A[2]):
            return 2 in A[2]
        return True
    if name == "4cy":
        return has_4_cycle(g) == (2 in A[2])
    if name == "01":
        if not g.p or min(g.degrees()) < 2:
            return None
        return ({1} <= A[2] <= {0, 1}) == (not has_4_cycle(g))
    if name == "1":
        return (A[2] == {1}) == (recognize_D(g) is not None)
    if name in ("exc", "023"):
        if f.kappa is not Connectivity.TWO:
            return None
        names = {str(lab) for lab in f.labels}
        a2 = A[2]
        if name == "exc":
            if a2 & {0, 1}:
                return None
            big = sorted(a2 - {2, 3})
            if len(big) != 1:
                return False
            ell = big[0]
            if a2 == {2, ell}:
                return f"Tprime_{ell}" in names
            return a2 == {2, 3, ell} and bool(names & {f"T_{ell}", f"Tclass_{ell}"}) \
                and f"Tprime_{ell}" not in names
        if a2 not in ({0, 2}, {0, 2, 3}):
            return None
        return bool(names & {"Cycle_4", "K2_2", "K2_3", "Sprime"})
    raise ValueError(name)


def verify_graph(g: Graph, which: Iterable[str] | None = None) -> VerificationReport:
    report = VerificationReport()
    f = _Facts(g)
    for name in _selected(which):
        t = report.tallies.setdefault(name, Tally())
        verdict = _check(name, f)
        if verdict is None:
            t.skipped += 1
        else:
            t.checked += 1
            if not verdict:
                t.mismatches += 1
                report.counterexamples.append((name, write_graph6(g).decode()))
    return report


def _verify_chunk(args) -> VerificationReport:
    lines, which = args
    report = VerificationReport()
    for line in lines:
        report = report.merge(verify_graph(parse_graph6(line), which))
    return report


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def verify_theorems(corpus: Iterable[Graph], which: Iterable[str] | None = None,
                    description: str = "", jobs: int = 1) -> VerificationReport:
    """Run the selected checks over every graph of ``corpus``."""
    start = time.perf_counter()
    selected = _selected(which)
    report = VerificationReport(description, {n: Tally() for n in selected})
    if jobs <= 1:
        for g in corpus:
            report = report.merge(verify_graph(g, selected))
    else:
        encoded = (write_graph6(g) for g in corpus)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_verify_chunk, ((blk, selected) for blk in _chunks(encoded, 200))):
                report = report.merge(part)
    report.corpus = description
    report.wall_time = time.perf_counter() - start
    return report


def small_corpus(max_order: int, filters: Iterable[str] = ("planar", "connected"),
                 min_order: int = 1) -> Iterator[Graph]:
    for p in range(min_order, max_order + 1):
        yield from enumerate_graphs(p, filters)
