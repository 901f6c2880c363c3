"""Isomorphism-reduced enumeration of small digraphs and graphs, mining of
minimal strong digraphs with a property, and exhaustive theorem checks."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator

from .digraph import Digraph, is_strong, suppress, underlying
from .families import ClassificationGap, classify_almost_planar, is_almost_planar
from .graph import Graph, edge, is_connected
from .kuratowski import is_kuratowski_digraph, is_minimal_strong_with, property_test
from .obstructions import (
    detect_outerplanar_obstruction,
    detect_series_parallel_obstruction,
    is_series_parallel_digraph,
)
from .orientation import CriticalForest, clean_back_cut
from .planarity import is_outerplanar
from .topological import critical_edges

DIGRAPH_MAX_N = 6
GRAPH_MAX_N = 8

THEOREMS = ("T1.2", "T1.3", "T3.1", "T5.4", "T6.1")
DEFAULT_MAX_N = {"T1.2": 5, "T1.3": 5, "T3.1": 6, "T5.4": 6, "T6.1": 6}
THEOREM_MAX_N = {"T1.2": 6, "T1.3": 6, "T3.1": 6, "T5.4": 6, "T6.1": 6}


# --- canonical forms ------------------------------------------------------


def _refine(n: int, out_adj: list[set[int]], in_adj: list[set[int]]) -> list[int]:
    """Stable colour refinement; returns a colour per vertex (colours are
    comparable across relabelings of the same digraph)."""
    colour = [0] * n
    while True:
        sig = [
            (colour[v], sorted(colour[w] for w in out_adj[v]), sorted(colour[w] for w in in_adj[v]))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(map(repr, sig))))}
        new = [ranks[repr(s)] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def _canonical(n: int, arcs: Iterable[tuple[int, int]]) -> tuple:
    out_adj: list[set[int]] = [set() for _ in range(n)]
    in_adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in arcs:
        out_adj[u].add(v)
        in_adj[v].add(u)
    colour = _refine(n, out_adj, in_adj)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    groups = [cells[c] for c in sorted(cells)]
    best = None
    for parts in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = [v for part in parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sorted((pos[u], pos[v]) for u in range(n) for v in out_adj[u]))
        if best is None or code < best:
            best = code
    return (n, tuple(sorted(colour)), best or ())


def canonical_key(obj: Digraph | Graph) -> tuple:
    """Equal for two objects exactly when they are isomorphic.

    A graph is keyed as the symmetric digraph on its edges, tagged so it
    never collides with a digraph key.
    """
    if isinstance(obj, Digraph):
        return ("D",) + _canonical(obj.vertex_count, obj.arcs)
    sym = [(u, v) for u, v in obj.edges] + [(v, u) for u, v in obj.edges]
    return ("G",) + _canonical(obj.vertex_count, sym)


def canonical_digraph(d: Digraph) -> Digraph:
    """The representative whose arcs are the canonical code."""
    return Digraph.from_arcs(d.vertex_count, canonical_key(d)[3])


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_edges(g.vertex_count, ((u, v) for u, v in canonical_key(g)[3] if u < v))


# --- enumeration -------------------------------------------------------------


def _digraph_classes(n: int) -> list[Digraph]:
    """One canonical digraph per class, built by adding a vertex to every
    class one size down in all 3^(n-1) ways and deduplicating by key."""
    if n > DIGRAPH_MAX_N:
        raise ValueError(f"digraph sweeps are bounded at n <= {DIGRAPH_MAX_N}")
    if n == 0:
        return [Digraph.from_arcs(0, [])]
    seen: dict[tuple, Digraph] = {}
    new = n - 1
    for base in _digraph_classes_cached(n - 1):
        for pattern in itertools.product((0, 1, 2), repeat=new):
            arcs = set(base.arcs)
            for v, p in enumerate(pattern):
                if p == 1:
                    arcs.add((v, new))
                elif p == 2:
                    arcs.add((new, v))
            d = Digraph(n, frozenset(arcs))
            key = canonical_key(d)
            if key not in seen:
                seen[key] = Digraph.from_arcs(n, key[3])
    return [seen[k] for k in sorted(seen)]


_DIGRAPH_CACHE: dict[int, list[Digraph]] = {}


def _digraph_classes_cached(n: int) -> list[Digraph]:
    if n not in _DIGRAPH_CACHE:
        _DIGRAPH_CACHE[n] = _digraph_classes(n)
    return _DIGRAPH_CACHE[n]


def enumerate_digraphs(n: int, filter: Callable[[Digraph], bool] | None = None) -> Iterator[Digraph]:
    """Each digon-free digraph on exactly n vertices passing ``filter``, once
    per isomorphism class, in canonical-key order."""
    for d in _digraph_classes_cached(n):
        if filter is None or filter(d):
            yield d


def _graph_classes(n: int) -> list[Graph]:
    if n > GRAPH_MAX_N:
        raise ValueError(f"graph sweeps are bounded at n <= {GRAPH_MAX_N}")
    if n == 0:
        return [Graph.from_edges(0, [])]
    seen: dict[tuple, Graph] = {}
    new = n - 1
    for base in _graph_classes_cached(n - 1):
        for mask in range(1 << new):
            g = Graph(n, base.edges | frozenset((v, new) for v in range(new) if mask >> v & 1))
            key = canonical_key(g)
            if key not in seen:
                seen[key] = g
    return [seen[k] for k in sorted(seen)]


_GRAPH_CACHE: dict[int, list[Graph]] = {}


def _graph_classes_cached(n: int) -> list[Graph]:
    if n not in _GRAPH_CACHE:
        _GRAPH_CACHE[n] = _graph_classes(n)
    return _GRAPH_CACHE[n]


def enumerate_graphs(n: int, filter: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """Each simple graph on exactly n vertices passing ``filter``, once per class."""
    for g in _graph_classes_cached(n):
        if filter is None or filter(g):
            yield g


def labelled_digraphs(n: int) -> Iterator[Digraph]:
    """All 3^(n(n-1)/2) labelled digon-free digraphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for pattern in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = [(u, v) if p == 1 else (v, u) for (u, v), p in zip(pairs, pattern) if p]
        yield Digraph(n, frozenset(arcs))


# --- minimal strong digraphs ------------------------------------------------


def _has_no_isolated(d: Digraph) -> bool:
    return all(d.succ[v] or d.pred[v] for v in d.vertices)


def minimal_strong_with(prop: str, n: int) -> list[Digraph]:
    """Classes on at most n vertices (no isolated vertices) that are strong,
    have ``prop``, and contain no proper strong subdigraph with it."""
    test = property_test(prop)
    out = []
    for k in range(1, n + 1):
        for d in enumerate_digraphs(k):
            if not _has_no_isolated(d) or not is_strong(d):
                continue
            if test(k, underlying(d).edges) and is_minimal_strong_with(d, prop):
                out.append(d)
    return out


# --- theorem verification ---------------------------------------------------


@dataclass
class VerificationReport:
    theorem: str
    max_n: int
    enumerated: int = 0
    holders: int = 0
    minimal: int = 0
    mismatches: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerificationReport") -> None:
        self.enumerated += other.enumerated
        self.holders += other.holders
        self.minimal += other.minimal
        self.mismatches += other.mismatches
        self.counterexamples += other.counterexamples
        for k, v in other.details.items():
            if isinstance(v, int):
                self.details[k] = self.details.get(k, 0) + v
            elif isinstance(v, list):
                self.details.setdefault(k, []).extend(v)

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "n_range": [1, self.max_n],
            "counts": {
                "enumerated": self.enumerated,
                "property_holders": self.holders,
                "minimal": self.minimal,
                "mismatches": self.mismatches,
            },
            "counterexamples": self.counterexamples,
            "details": self.details,
            "pass": self.passed,
        }


def _arcs(d: Digraph) -> list[list[int]]:
    return [list(a) for a in d.sorted_arcs()]


def _check_obstruction_equivalence(d: Digraph, rep: VerificationReport, outer: bool) -> None:
    if outer:
        holds = not is_outerplanar(underlying(d))
        w = detect_outerplanar_obstruction(d)
    else:
        holds = not is_series_parallel_digraph(d)
        w = detect_series_parallel_obstruction(d)
    rep.holders += holds
    if w is not None:
        try:
            w.validate(d)
        except ValueError as exc:
            rep.counterexamples.append({"n": d.vertex_count, "arcs": _arcs(d), "error": str(exc)})
            rep.mismatches += 1
            return
        rep.details[w.kind.split("(")[0]] = rep.details.get(w.kind.split("(")[0], 0) + 1
    if holds != (w is not None):
        rep.mismatches += 1
        rep.counterexamples.append(
            {"n": d.vertex_count, "arcs": _arcs(d), "property": holds, "obstruction": w is not None}
        )


def _check_kuratowski(d: Digraph, rep: VerificationReport, theorem: str) -> None:
    """d is strong, nonplanar and minimal; check the suppressed form."""
    rep.minimal += 1
    core = suppress(d.induced_on_support()[0])
    g = underlying(core)
    entry = {"n": d.vertex_count, "arcs": _arcs(d)}
    if not is_almost_planar(g):
        rep.mismatches += 1
        rep.counterexamples.append(dict(entry, error="suppressed form is not almost-planar"))
        return
    if not is_kuratowski_digraph(core):
        rep.mismatches += 1
        rep.counterexamples.append(dict(entry, error="suppressed form is not a Kuratowski digraph"))
        return
    if theorem == "T5.4":
        try:
            cert = classify_almost_planar(g)
            cert.check(g)
            rep.details[cert.family] = rep.details.get(cert.family, 0) + 1
        except (ClassificationGap, ValueError) as exc:
            rep.mismatches += 1
            rep.counterexamples.append(dict(entry, error=f"classification: {exc}"))
    elif theorem == "T6.1":
        f = critical_edges(g, "nonplanar")
        CriticalForest.of(g, f)
        for arc in core.sorted_arcs():
            if edge(*arc) not in f:
                continue
            rep.details["critical_arcs"] = rep.details.get("critical_arcs", 0) + 1
            try:
                clean_back_cut(core, arc, f).check(core, f)
            except (LookupError, ValueError) as exc:
                rep.mismatches += 1
                rep.counterexamples.append(dict(entry, arc=list(arc), error=str(exc)))


def _verify_chunk(theorem: str, n: int, chunk: int, chunks: int) -> VerificationReport:
    rep = VerificationReport(theorem, n)
    for i, d in enumerate(enumerate_digraphs(n)):
        if i % chunks != chunk:
            continue
        rep.enumerated += 1
        if not _has_no_isolated(d) or not is_strong(d):
            continue
        if theorem in ("T1.2", "T1.3"):
            _check_obstruction_equivalence(d, rep, theorem == "T1.2")
        else:
            if not property_test("nonplanar")(n, underlying(d).edges):
                continue
            rep.holders += 1
            if is_minimal_strong_with(d, "nonplanar"):
                _check_kuratowski(d, rep, theorem)
    return rep


def verify_theorem(theorem: str, max_n: int | None = None, jobs: int = 1) -> VerificationReport:
    """Run the exhaustive check for ``theorem`` on every class with at most
    ``max_n`` vertices.  Work is split into ``jobs`` interleaved chunks per
    vertex count; merged results do not depend on ``jobs``."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    max_n = DEFAULT_MAX_N[theorem] if max_n is None else max_n
    if not 1 <= max_n <= THEOREM_MAX_N[theorem]:
        raise ValueError(f"{theorem} is bounded at max_n <= {THEOREM_MAX_N[theorem]}")
    report = VerificationReport(theorem, max_n)
    for n in range(1, max_n + 1):
        _digraph_classes_cached(n)  # build once in the parent before forking
        chunks = max(1, jobs)
        if chunks == 1:
            parts = [_verify_chunk(theorem, n, 0, 1)]
        else:
            with ProcessPoolExecutor(chunks) as pool:
                parts = list(pool.map(_verify_chunk, [theorem] * chunks, [n] * chunks,
                                      range(chunks), [chunks] * chunks))
        for part in parts:
            report.merge(part)
    report.counterexamples.sort(key=lambda c: (c["n"], c["arcs"]))
    report.details = {k: sorted(v) if isinstance(v, list) else v for k, v in sorted(report.details.items())}
    return report
