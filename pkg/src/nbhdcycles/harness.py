"""Exhaustive desk-scale checks over all small graphs.

Three scans are provided:

* ``chen-yu``: connected graphs with at most 2n-4 edges must have an
  independent cut.
* ``forest-cut``: connected graphs with fewer than 3n-6 edges should have a
  forest cut. This is an open conjecture, so a counterexample is a finding
  rather than a bug.
* ``extremal``: 3-connected graphs in which every neighborhood contains a
  cycle; reports the fewest edges seen and lists every graph with
  8m < 15n along with its bound report.

Graphs come either from native generation or from a graph6 stream (for
example the output of nauty's ``geng``). Reported graphs are always in
canonical graph6 form and sorted, so both sources produce identical reports.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable

from .cuts import find_forest_cut, find_independent_cut, validate_certificate
from .enumeration import (
    MAX_NATIVE_N,
    EnumerationConstraints,
    canonical_form,
    enumerate_graphs,
    ingest_graph6_stream,
)
from .graph import Graph, encode_graph6
from .verifier import verify_theorem1

__all__ = [
    "SearchReport",
    "HARNESSES",
    "default_jobs",
    "run_chen_yu_check",
    "run_forest_cut_check",
    "run_extremal_search",
    "run_harness",
]

JOBS_ENV = "NBHDCYCLES_JOBS"


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class SearchReport:
    harness: str
    constraints: EnumerationConstraints
    source: str
    graphs_scanned: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    extremal_value: int | None = None
    extremal_witnesses: list[str] = field(default_factory=list)
    # Graphs meeting the bound on which some step of the argument still failed.
    anomalies: list[dict] = field(default_factory=list)
    note: str = ""
    elapsed: float = 0.0

    def to_record(self) -> dict:
        return {
            "harness": self.harness,
            "source": self.source,
            "constraints": self.constraints.to_record(),
            "note": self.note,
            "graphs_scanned": self.graphs_scanned,
            "counterexamples": self.counterexamples,
            "extremal_value": self.extremal_value,
            "extremal_witnesses": self.extremal_witnesses,
            "anomalies": self.anomalies,
            "elapsed": round(self.elapsed, 3),
        }


def _label(G: Graph) -> str:
    g6 = canonical_form(G) if G.n <= MAX_NATIVE_N else encode_graph6(G)
    return g6.decode("ascii")


def _chen_yu_one(G: Graph):
    cert = find_independent_cut(G)
    if cert is not None:
        validate_certificate(G, cert)
        return None
    return {"graph6": _label(G), "diagnostics": {"m": G.m, "edge_limit": 2 * G.n - 4}}


def _forest_cut_one(G: Graph):
    cert = find_forest_cut(G)
    if cert is not None:
        validate_certificate(G, cert)
        return None
    return {"graph6": _label(G), "diagnostics": {"m": G.m, "edge_limit": 3 * G.n - 7}}


def _extremal_one(G: Graph):
    report = verify_theorem1(G)
    return G.m, _label(G), report


def _scan(func: Callable, graphs: Iterable[Graph], jobs: int):
    if jobs <= 1:
        yield from map(func, graphs)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(func, graphs, chunksize=64)


def _graphs(c: EnumerationConstraints, source) -> Iterable[Graph]:
    if source is None or source == "native":
        return enumerate_graphs(c)
    return ingest_graph6_stream(source, c)


def _check_n(n: int) -> None:
    if n < 4:
        raise ValueError(f"harnesses need n >= 4, got {n}")


def _cut_harness(name: str, func, c: EnumerationConstraints, source, jobs, note) -> SearchReport:
    start = time.perf_counter()
    report = SearchReport(name, c, "native" if source in (None, "native") else "stream", note=note)
    for result in _scan(func, _graphs(c, source), jobs):
        report.graphs_scanned += 1
        if result is not None:
            report.counterexamples.append(result)
    report.counterexamples.sort(key=lambda r: r["graph6"])
    report.elapsed = time.perf_counter() - start
    return report


def run_chen_yu_check(n: int, source=None, jobs: int | None = None) -> SearchReport:
    """Every connected n-vertex graph with at most 2n-4 edges should have an independent cut."""
    _check_n(n)
    c = EnumerationConstraints(n, connected_only=True, max_edges=2 * n - 4)
    note = "connected graphs with m <= 2n-4; disconnected graphs have the empty independent cut"
    return _cut_harness("chen-yu", _chen_yu_one, c, source, jobs or default_jobs(), note)


def run_forest_cut_check(n: int, source=None, jobs: int | None = None) -> SearchReport:
    """Every connected n-vertex graph with fewer than 3n-6 edges is conjectured to have a forest cut."""
    _check_n(n)
    c = EnumerationConstraints(n, connected_only=True, max_edges=3 * n - 7)
    note = "connected graphs with m < 3n-6; a counterexample refutes the forest-cut conjecture"
    return _cut_harness("forest-cut", _forest_cut_one, c, source, jobs or default_jobs(), note)


def run_extremal_search(n: int, source=None, jobs: int | None = None) -> SearchReport:
    """Fewest edges of a 3-connected n-vertex graph with a cycle in every neighborhood."""
    _check_n(n)
    start = time.perf_counter()
    c = EnumerationConstraints(n, connected_only=True, min_connectivity=3, require_neighborhood_cycles=True)
    note = "3-connected graphs with a cycle in every neighborhood; counterexamples have 8m < 15n"
    report = SearchReport("extremal", c, "native" if source in (None, "native") else "stream", note=note)
    witnesses = []
    for m, label, bound in _scan(_extremal_one, _graphs(c, source), jobs or default_jobs()):
        report.graphs_scanned += 1
        if report.extremal_value is None or m < report.extremal_value:
            report.extremal_value = m
            witnesses = [label]
        elif m == report.extremal_value:
            witnesses.append(label)
        if not bound.original_bound_holds:
            report.counterexamples.append({"graph6": label, "diagnostics": bound.to_record()})
        elif bound.step_failures:
            report.anomalies.append({"graph6": label, "diagnostics": bound.to_record()})
    report.extremal_witnesses = sorted(witnesses)
    report.counterexamples.sort(key=lambda r: r["graph6"])
    report.anomalies.sort(key=lambda r: r["graph6"])
    report.elapsed = time.perf_counter() - start
    return report


HARNESSES = {
    "chen-yu": run_chen_yu_check,
    "forest-cut": run_forest_cut_check,
    "extremal": run_extremal_search,
}


def run_harness(name: str, n: int, source=None, jobs: int | None = None) -> SearchReport:
    try:
        func = HARNESSES[name]
    except KeyError:
        raise ValueError(f"unknown harness {name!r}; expected one of {', '.join(HARNESSES)}") from None
    return func(n, source, jobs)
