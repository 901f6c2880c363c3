"""Exact backtracking search for (directed) subdivisions of a pattern.

Branch vertices are placed lazily: pattern edges are routed in a fixed order
in which every edge after the first has an already-placed endpoint, and the
far end of a path may claim a fresh host vertex as the next branch image.
"""

from __future__ import annotations

from typing import Iterator

from .digraph import Digraph
from .graph import (
    Edge,
    Graph,
    complete_bipartite,
    complete_graph,
    components,
    has_k4_subdivision,
    mobius_ladder,
)
from .planarity import planar_edges
from .witness import DirectedSubdivisionWitness, SubdivisionWitness

HOST_VERTEX_CAP = 16


def _popcount(x: int) -> int:
    return bin(x).count("1")


class SizeCapError(ValueError):
    """The input exceeds the size an exponential search is allowed to take on."""


def _route_order(n: int, pattern_edges: list[tuple[int, int]], degree: list[int]) -> tuple[int, list[tuple[int, int]]]:
    """Root vertex and a routing order; each edge touches a placed vertex."""
    root = max(range(n), key=lambda v: (degree[v], -v))
    placed = {root}
    left = list(pattern_edges)
    order = []
    while left:
        closing = [e for e in left if e[0] in placed and e[1] in placed]
        if closing:
            pick = closing[0]
        else:
            touching = [e for e in left if e[0] in placed or e[1] in placed]
            if not touching:
                # disconnected pattern: start a new root
                v = max((x for e in left for x in e), key=lambda x: (degree[x], -x))
                placed.add(v)
                order.append((v, -1))
                continue
            pick = max(touching, key=lambda e: degree[e[1] if e[0] in placed else e[0]])
        left.remove(pick)
        order.append(pick)
        placed.update(pick)
    return root, order


class _Search:
    """Shared machinery.  ``fwd``/``bwd`` are host neighbour masks along and
    against arc direction; for undirected hosts both are the plain masks."""

    def __init__(self, host_n: int, fwd, bwd, deg_ok, pn: int,
                 parcs: list[tuple[int, int]], degree: list[int], rigid: frozenset) -> None:
        self.hn = host_n
        self.fwd = fwd
        self.bwd = bwd
        self.deg_ok = deg_ok
        self.pn = pn
        self.rigid = rigid
        self.root, self.order = _route_order(pn, parcs, degree)
        self.img = [-1] * pn
        self.paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def run(self) -> Iterator[tuple[tuple[int, ...], dict]]:
        for x in range(self.hn):
            if self.deg_ok(x, self.root):
                self.img[self.root] = x
                yield from self._step(0, 1 << x)
                self.img[self.root] = -1

    def _step(self, i: int, used: int) -> Iterator[tuple[tuple[int, ...], dict]]:
        if i == len(self.order):
            yield tuple(self.img), dict(self.paths)
            return
        a, b = self.order[i]
        if b == -1:
            for x in range(self.hn):
                if not used >> x & 1 and self.deg_ok(x, a):
                    self.img[a] = x
                    yield from self._step(i + 1, used | 1 << x)
                    self.img[a] = -1
            return
        if self.img[a] >= 0:
            src, dst, nbr, far, forward = self.img[a], self.img[b], self.fwd, b, True
        else:
            src, dst, nbr, far, forward = self.img[b], self.img[a], self.bwd, a, False
        for path in self._paths(src, dst, nbr, used, far, (a, b) in self.rigid):
            new_used = used
            for x in path[1:]:
                new_used |= 1 << x
            if dst < 0:
                self.img[far] = path[-1]
            self.paths[(a, b)] = tuple(path) if forward else tuple(reversed(path))
            if self._room(i + 1, new_used):
                yield from self._step(i + 1, new_used)
            del self.paths[(a, b)]
            if dst < 0:
                self.img[far] = -1

    def _room(self, i: int, used: int) -> bool:
        """Each placed vertex keeps enough usable host neighbours for its
        unrouted pattern arcs, per direction."""
        need_out = [0] * self.pn
        need_in = [0] * self.pn
        bonus_out = [0] * self.pn
        bonus_in = [0] * self.pn
        for a, b in self.order[i:]:
            if b == -1:
                continue
            need_out[a] += 1
            need_in[b] += 1
            ia, ib = self.img[a], self.img[b]
            if ia >= 0 and ib >= 0:
                if self.fwd[ia] >> ib & 1:
                    bonus_out[a] += 1
                if self.bwd[ib] >> ia & 1:
                    bonus_in[b] += 1
        return self._enough(need_out, need_in, bonus_out, bonus_in, used)

    def _enough(self, need_out, need_in, bonus_out, bonus_in, used) -> bool:
        for p in range(self.pn):
            x = self.img[p]
            if x < 0:
                continue
            if need_out[p] > bonus_out[p] + _popcount(self.fwd[x] & ~used):
                return False
            if need_in[p] > bonus_in[p] + _popcount(self.bwd[x] & ~used):
                return False
        return True

    def _paths(self, src: int, dst: int, nbr, used: int, far: int, rigid: bool):
        """Simple paths from ``src`` through unused vertices.

        With ``dst >= 0`` they end at ``dst``; otherwise at any unused vertex
        able to host pattern vertex ``far``.
        """
        stack = [(src, [src], used)]
        while stack:
            x, path, u = stack.pop()
            nb = nbr[x]
            if dst >= 0:
                if nb >> dst & 1:
                    yield path + [dst]
            else:
                cand = nb & ~u
                while cand:
                    low = cand & -cand
                    cand ^= low
                    y = low.bit_length() - 1
                    if self.deg_ok(y, far):
                        yield path + [y]
            if rigid:
                continue
            ext = nb & ~u
            if dst >= 0:
                ext &= ~(1 << dst)
            while ext:
                low = ext & -ext
                ext ^= low
                y = low.bit_length() - 1
                stack.append((y, path + [y], u | low))


class _UndirectedSearch(_Search):
    def _enough(self, need_out, need_in, bonus_out, bonus_in, used) -> bool:
        for p in range(self.pn):
            x = self.img[p]
            if x < 0:
                continue
            need = need_out[p] + need_in[p]
            if need > bonus_out[p] + bonus_in[p] + _popcount(self.fwd[x] & ~used):
                return False
        return True


def _iter_undirected(g: Graph, pattern: Graph) -> Iterator[SubdivisionWitness]:
    _check_cap(g.vertex_count)
    if any(pattern.degree(v) == 0 for v in pattern.vertices):
        raise ValueError("pattern vertices must have degree at least 1")
    if pattern.vertex_count > g.vertex_count or pattern.num_edges > g.num_edges:
        return
    pdeg = [pattern.degree(v) for v in pattern.vertices]
    hdeg = [g.degree(v) for v in g.vertices]
    s = _UndirectedSearch(
        g.vertex_count, g.masks, g.masks, lambda x, p: hdeg[x] >= pdeg[p],
        pattern.vertex_count, pattern.sorted_edges(), pdeg, frozenset(),
    )
    for img, paths in s.run():
        yield SubdivisionWitness(pattern, img, paths)


def contains_subdivision(g: Graph, pattern: Graph) -> SubdivisionWitness | None:
    return next(_iter_undirected(g, pattern), None)


def iter_subdivisions(g: Graph, pattern: Graph) -> Iterator[SubdivisionWitness]:
    """Every embedding, including those differing only by a pattern automorphism."""
    return _iter_undirected(g, pattern)


def iter_directed_subdivisions(
    d: Digraph, pattern: Digraph, rigid: frozenset = frozenset()
) -> Iterator[DirectedSubdivisionWitness]:
    """Directed subdivisions of ``pattern`` in ``d``; arcs in ``rigid`` stay unsubdivided."""
    _check_cap(d.vertex_count)
    if pattern.vertex_count == 0:
        raise ValueError("pattern must be nonempty")
    if pattern.vertex_count > d.vertex_count or pattern.num_arcs > d.num_arcs:
        return
    pin = [len(pattern.pred[v]) for v in pattern.vertices]
    pout = [len(pattern.succ[v]) for v in pattern.vertices]
    hin = [len(d.pred[v]) for v in d.vertices]
    hout = [len(d.succ[v]) for v in d.vertices]
    s = _Search(
        d.vertex_count, d.out_masks, d.in_masks,
        lambda x, p: hout[x] >= pout[p] and hin[x] >= pin[p],
        pattern.vertex_count, pattern.sorted_arcs(),
        [pin[v] + pout[v] for v in pattern.vertices], frozenset(rigid),
    )
    for img, paths in s.run():
        yield DirectedSubdivisionWitness(pattern, img, paths)


def contains_directed_subdivision(
    d: Digraph, pattern: Digraph, rigid: frozenset = frozenset()
) -> DirectedSubdivisionWitness | None:
    return next(iter_directed_subdivisions(d, pattern, rigid), None)


def _check_cap(n: int) -> None:
    if n > HOST_VERTEX_CAP:
        raise SizeCapError(
            f"host has {n} vertices; subdivision search is capped at {HOST_VERTEX_CAP}"
        )


# --- derived invariants ----------------------------------------------------


def cycle_rank(g: Graph) -> int:
    return g.num_edges - g.vertex_count + len(components(g))


def ladder_number(g: Graph) -> int | None:
    """Largest k with a k-rung Mobius ladder subdivision; None without a K4 subdivision.

    The k-rung ladder has cycle rank k + 1 and 2k vertices, which bounds the
    start of the downward search; k is capped at 6.
    """
    if not has_k4_subdivision(g):
        return None
    top = min(6, g.vertex_count // 2, cycle_rank(g) - 1)
    for k in range(top, 2, -1):
        if contains_subdivision(g, mobius_ladder(k)) is not None:
            return k
    return 2


def critical_edges(g: Graph, criterion: str = "nonplanar") -> frozenset[Edge]:
    """Edges whose deletion leaves the criterion true."""
    if criterion == "nonplanar":
        return frozenset(e for e in g.edges if not planar_edges(g.vertex_count, g.edges - {e}))
    if criterion == "has-K4-subdivision":
        return frozenset(e for e in g.edges if has_k4_subdivision(g.remove_edges([e])))
    raise ValueError(f"unknown criterion {criterion!r}")


def nonplanar_by_search(g: Graph) -> bool:
    """Nonplanarity decided by looking for K5 and K3,3 subdivisions directly."""
    return (
        contains_subdivision(g, complete_graph(5)) is not None
        or contains_subdivision(g, complete_bipartite(3, 3)) is not None
    )
