"""Minimality under subdigraph containment for strong digraphs with a
monotone property of the underlying graph (nonplanar, non-outerplanar,
non-series-parallel)."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .digraph import Digraph, is_strong, is_strong_on_support, suppress_with_paths, underlying
from .graph import Edge, Graph, edge, has_k4_subdivision
from .planarity import planar_edges
from .topological import SizeCapError
from .witness import DirectedSubdivisionWitness

MINIMALITY_ARC_CAP = 20

PROPERTIES = ("nonplanar", "non-outerplanar", "non-series-parallel")


def _nonplanar(n: int, edges: frozenset[Edge]) -> bool:
    return not planar_edges(n, edges)


def _non_outerplanar(n: int, edges: frozenset[Edge]) -> bool:
    return not planar_edges(n + 1, edges | frozenset((v, n) for v in range(n)))


def _non_sp(n: int, edges: frozenset[Edge]) -> bool:
    return has_k4_subdivision(Graph(n, edges))


_TESTS: dict[str, Callable[[int, frozenset[Edge]], bool]] = {
    "nonplanar": _nonplanar,
    "non-outerplanar": _non_outerplanar,
    "non-series-parallel": _non_sp,
}


def property_test(prop: str) -> Callable[[int, frozenset[Edge]], bool]:
    try:
        return _TESTS[prop]
    except KeyError:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}") from None


@lru_cache(maxsize=1 << 14)
def removable_sets(g: Graph, prop: str) -> tuple[frozenset[Edge], ...]:
    """Every nonempty edge set X with the property still holding on g - X.

    The family is closed under taking subsets, so a depth-first walk that
    stops at the first failure enumerates it exactly.
    """
    test = property_test(prop)
    n = g.vertex_count
    if not test(n, g.edges):
        return ()
    crit = sorted(e for e in g.edges if test(n, g.edges - {e}))
    out: list[frozenset[Edge]] = []

    def grow(start: int, chosen: frozenset[Edge]) -> None:
        for i in range(start, len(crit)):
            x = chosen | {crit[i]}
            if test(n, g.edges - x):
                out.append(x)
                grow(i + 1, x)

    grow(0, frozenset())
    return tuple(out)


def _strong_subdigraphs_with(d: Digraph, prop: str) -> Iterator[frozenset[Edge]]:
    """Removable edge sets X (nonempty) leaving d - X strong on its support."""
    by_edge = {edge(u, v): (u, v) for u, v in d.arcs}
    for x in removable_sets(underlying(d), prop):
        if is_strong_on_support(d.remove_arcs(by_edge[e] for e in x)):
            yield x


def _check_cap(d: Digraph) -> None:
    if d.num_arcs > MINIMALITY_ARC_CAP:
        raise SizeCapError(
            f"digraph has {d.num_arcs} arcs; minimality search is capped at {MINIMALITY_ARC_CAP}"
        )


def is_minimal_strong_with(d: Digraph, prop: str) -> bool:
    """Strong on its support, has the property, and no proper subdigraph does both."""
    _check_cap(d)
    if not is_strong_on_support(d) or not property_test(prop)(d.vertex_count, underlying(d).edges):
        return False
    # single-arc deletions settle most non-minimal inputs cheaply
    test = property_test(prop)
    edges = underlying(d).edges
    for a in d.sorted_arcs():
        if test(d.vertex_count, edges - {edge(*a)}) and is_strong_on_support(d.remove_arcs([a])):
            return False
    return next(_strong_subdigraphs_with(d, prop), None) is None


def is_kuratowski_digraph(d: Digraph) -> bool:
    """Strong, nonplanar, minimal with both, and not a proper directed subdivision."""
    _check_cap(d)
    if not is_strong(d) or any(not (d.succ[v] or d.pred[v]) for v in d.vertices):
        return False
    if suppress_with_paths(d)[0].vertex_count != d.vertex_count:
        return False
    return is_minimal_strong_with(d, "nonplanar")


def minimal_strong_subdigraph(d: Digraph, prop: str) -> Digraph | None:
    """A subdigraph of d (same vertex ids) minimal among strong ones with the property."""
    test = property_test(prop)
    by_edge = {edge(u, v): (u, v) for u, v in d.arcs}
    current = d
    if not (is_strong_on_support(current) and test(d.vertex_count, underlying(d).edges)):
        candidates = [
            x for x in removable_sets(underlying(d), prop)
            if is_strong_on_support(d.remove_arcs(by_edge[e] for e in x))
        ]
        if not candidates:
            return None
        best = max(candidates, key=lambda x: (len(x), sorted(x)))
        current = d.remove_arcs(by_edge[e] for e in best)
    while True:
        x = next(_strong_subdigraphs_with(current, prop), None)
        if x is None:
            return current
        current = current.remove_arcs(by_edge[e] for e in x)


def kuratowski_witness(d: Digraph) -> tuple[Digraph, DirectedSubdivisionWitness] | None:
    """A minimal strong nonplanar subdigraph of d, returned as its suppressed
    form plus a witness that d contains a directed subdivision of it."""
    sub = minimal_strong_subdigraph(d, "nonplanar")
    if sub is None:
        return None
    support, keep = sub.induced_on_support()
    core, survivors, paths = suppress_with_paths(support)
    branch = tuple(keep[v] for v in survivors)
    host_paths = {a: tuple(keep[x] for x in p) for a, p in paths.items()}
    return core, DirectedSubdivisionWitness(core, branch, host_paths)
