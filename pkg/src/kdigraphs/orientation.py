"""Good orientations of almost-planar graphs.

A good orientation is one that is a Kuratowski digraph.  Along every
critical edge such a digraph has a clean back-cut, which forces each
fundamental cycle (one non-critical edge plus a path of critical edges) to be
directed.  Cells group the edges those cycles tie together; each cell has at
most two consistent orientations, one the reverse of the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator

from .digraph import Arc, CutCertificate, Digraph, Orientation, delta, is_strong, underlying
from .families import FamilyCertificate, DoubleWheelSpec, MobiusChainSpec, MusselSpec
from .graph import Edge, Graph, edge, forest_components, has_F_cycle, is_forest, tree_path
from .kuratowski import MINIMALITY_ARC_CAP, is_kuratowski_digraph
from .topological import SizeCapError, critical_edges

BRUTE_EDGE_CAP = 20


@dataclass(frozen=True)
class CriticalForest:
    host: Graph
    f: frozenset[Edge]
    components: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, g: Graph, f: frozenset[Edge] | None = None) -> "CriticalForest":
        f = critical_edges(g, "nonplanar") if f is None else frozenset(f)
        if has_F_cycle(g, f):
            raise ValueError("the critical edges contain a cycle")
        return cls(g, f, tuple(forest_components(g.vertex_count, f)))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.f if v in e)

    @property
    def is_spanning_tree(self) -> bool:
        return len(self.f) == self.host.vertex_count - 1


@dataclass(frozen=True)
class BackCut:
    """A side A with exactly one leaving arc, ``arc``; clean when no arc of F enters A."""

    cut: CutCertificate
    arc: Arc
    clean: bool

    def check(self, d: Digraph, f: frozenset[Edge]) -> None:
        self.cut.check(d)
        if self.cut.out_arcs != {self.arc}:
            raise ValueError("the target arc is not the only arc leaving the side")
        if self.clean != (not any(edge(*a) in f for a in self.cut.in_arcs)):
            raise ValueError("clean flag disagrees with the entering arcs")

    def to_json(self) -> dict[str, Any]:
        doc = self.cut.to_json()
        doc.update(arc=list(self.arc), clean=self.clean)
        return doc


@dataclass(frozen=True)
class Cell:
    """Edges tied together by fundamental cycles, with one consistent
    orientation (or None when the cycles contradict each other)."""

    edges: frozenset[Edge]
    vertices: frozenset[int]
    orientation: tuple[Arc, ...] | None

    def orientations(self) -> list[tuple[Arc, ...]]:
        if self.orientation is None:
            return []
        return [self.orientation, tuple((v, u) for u, v in self.orientation)]


# --- fundamental cycles and cells -----------------------------------------


def fundamental_cycles(g: Graph, f: frozenset[Edge]) -> list[list[int]]:
    """Each cycle with exactly one edge outside f, as a closed vertex sequence
    ``[x, ..., y]`` where ``xy`` is that edge and the rest is the f-path."""
    f = frozenset(f)
    if not is_forest(g.vertex_count, f):
        raise ValueError("f must be acyclic")
    out = []
    for x, y in sorted(g.edges - f):
        path = tree_path(g.vertex_count, f, x, y)
        if path is not None:
            out.append(path)
    return out


def _cycle_edges(cyc: list[int]) -> list[tuple[int, int]]:
    """Consecutive pairs of a closed vertex sequence, in traversal order."""
    return list(zip(cyc, cyc[1:] + cyc[:1]))


def compute_cells(g: Graph, f: frozenset[Edge]) -> list[Cell]:
    """One cell per class of f-edges linked through fundamental cycles."""
    f = frozenset(f)
    cycles = fundamental_cycles(g, f)
    cyc_edges = [[edge(a, b) for a, b in _cycle_edges(c)] for c in cycles]
    through: dict[Edge, list[int]] = {}
    for i, es in enumerate(cyc_edges):
        for e in es:
            through.setdefault(e, []).append(i)
    cells = []
    done: set[Edge] = set()
    for seed in sorted(f):
        if seed in done:
            continue
        members = {seed}
        used_cycles: set[int] = set()
        todo = [seed]
        while todo:
            e = todo.pop()
            for i in through.get(e, ()):
                if i in used_cycles:
                    continue
                used_cycles.add(i)
                for e2 in cyc_edges[i]:
                    if e2 not in members:
                        members.add(e2)
                        todo.append(e2)
        done |= members
        orient = _propagate(seed, members, [cycles[i] for i in sorted(used_cycles)])
        verts = frozenset(v for e in members for v in e)
        cells.append(Cell(frozenset(members), verts, orient))
    return cells


def _propagate(seed: Edge, members: set[Edge], cycles: list[list[int]]) -> tuple[Arc, ...] | None:
    """Fix ``seed`` as low -> high and push directions around every cycle.

    Direction of an edge is a sign: +1 when it points from its smaller end.
    Along a directed cycle, sign * (traversal sign) is constant.
    """
    links: dict[Edge, list[tuple[Edge, int]]] = {e: [] for e in members}
    for cyc in cycles:
        pairs = _cycle_edges(cyc)
        e0 = edge(*pairs[0])
        s0 = 1 if pairs[0][0] < pairs[0][1] else -1
        for a, b in pairs[1:]:
            s = 1 if a < b else -1
            links[e0].append((edge(a, b), s * s0))
            links[edge(a, b)].append((e0, s * s0))
    sign = {seed: 1}
    todo = [seed]
    while todo:
        e = todo.pop()
        for e2, rel in links[e]:
            want = sign[e] * rel
            if e2 not in sign:
                sign[e2] = want
                todo.append(e2)
            elif sign[e2] != want:
                return None
    return tuple(sorted((u, v) if sign[(u, v)] > 0 else (v, u) for u, v in members))


def propagate_orientation(g: Graph, f: frozenset[Edge]) -> list[tuple[Cell, list[tuple[Arc, ...]]]]:
    """Per cell, every orientation making all its fundamental cycles directed."""
    return [(c, c.orientations()) for c in compute_cells(g, f)]


# --- the odd-subtree obstruction ----------------------------------------


@dataclass(frozen=True)
class SubtreeObstruction:
    """``parts[0]`` is T0; ``parts[1:]`` are T1..Tk with k odd."""

    parts: tuple[frozenset[int], ...]
    tree_edges: tuple[Edge, ...]
    cycle_edges: tuple[Edge, ...]

    @property
    def k(self) -> int:
        return len(self.parts) - 1

    def check(self, g: Graph, f: frozenset[Edge]) -> None:
        k = self.k
        if k < 3 or k % 2 == 0:
            raise ValueError("k must be odd and at least 3")
        seen: set[int] = set()
        for part in self.parts:
            if seen & part:
                raise ValueError("subtrees overlap")
            seen |= part
            sub = [e for e in f if e[0] in part and e[1] in part]
            if len(sub) != len(part) - 1 or not is_forest(g.vertex_count, sub):
                raise ValueError("a part is not a subtree of T")
        t0 = self.parts[0]
        for i in range(1, k + 1):
            e = self.tree_edges[i - 1]
            if e not in f or not ({e[0], e[1]} & t0 and {e[0], e[1]} & self.parts[i]):
                raise ValueError(f"no tree edge between T{i} and T0")
            c = self.cycle_edges[i - 1]
            nxt = self.parts[i % k + 1]
            if c not in g.edges or c in f or not (
                {c[0], c[1]} & self.parts[i] and {c[0], c[1]} & nxt
            ):
                raise ValueError(f"no non-tree edge between T{i} and T{i % k + 1}")


def _subtrees(adj: dict[int, set[int]], allowed: set[int]) -> Iterator[frozenset[int]]:
    """Connected vertex sets inside ``allowed`` (each once)."""
    order = sorted(allowed)
    for root in order:
        # subtrees whose least vertex is root
        stack = [(frozenset({root}), frozenset(y for y in adj[root] if y in allowed and y > root))]
        while stack:
            cur, frontier = stack.pop()
            yield cur
            front = sorted(frontier)
            for i, y in enumerate(front):
                new_front = (frontier - set(front[: i + 1])) | {
                    z for z in adj[y] if z in allowed and z > root and z not in cur
                }
                new_front -= set(front[: i + 1])
                stack.append((cur | {y}, frozenset(new_front)))


def odd_subtree_obstruction(g: Graph, forest: CriticalForest) -> SubtreeObstruction | None:
    """Subtrees T0..Tk of the spanning tree T, k odd, with each Ti (i >= 1)
    joined to T0 by a tree edge and to T(i+1) by a non-tree edge, cyclically.

    Each Ti may be taken to be a whole component of T - V(T0), and T0 may be
    restricted to internal vertices of T; the search then looks for an odd
    cycle among the components.
    """
    f = forest.f
    n = g.vertex_count
    if not forest.is_spanning_tree:
        raise ValueError("the critical edges must form a spanning tree")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in f:
        adj[u].add(v)
        adj[v].add(u)
    internal = {v for v in range(n) if len(adj[v]) >= 2}
    non_tree = sorted(g.edges - f)
    for t0 in _subtrees(adj, internal):
        comp_of: dict[int, int] = {}
        comps: list[set[int]] = []
        attach: list[Edge] = []
        for v in sorted(t0):
            for w in sorted(adj[v]):
                if w in t0 or w in comp_of:
                    continue
                idx = len(comps)
                comp = {w}
                todo = [w]
                while todo:
                    x = todo.pop()
                    comp_of[x] = idx
                    for y in adj[x]:
                        if y not in t0 and y not in comp:
                            comp.add(y)
                            todo.append(y)
                comps.append(comp)
                attach.append(edge(v, w))
        if len(comps) < 3:
            continue
        cyc = _odd_cycle(len(comps), [(comp_of[a], comp_of[b], (a, b)) for a, b in non_tree
                                      if a in comp_of and b in comp_of and comp_of[a] != comp_of[b]])
        if cyc is None:
            continue
        order, links = cyc
        return SubtreeObstruction(
            (frozenset(t0),) + tuple(frozenset(comps[i]) for i in order),
            tuple(attach[i] for i in order),
            tuple(links),
        )
    return None


def _odd_cycle(k: int, arcs: list[tuple[int, int, Edge]]) -> tuple[list[int], list[Edge]] | None:
    """An odd cycle in the multigraph on 0..k-1, as vertex order plus linking edges."""
    adj: dict[int, list[tuple[int, Edge]]] = {i: [] for i in range(k)}
    for a, b, e in arcs:
        adj[a].append((b, e))
        adj[b].append((a, e))
    colour: dict[int, int] = {}
    parent: dict[int, tuple[int, Edge] | None] = {}
    for s in range(k):
        if s in colour:
            continue
        colour[s] = 0
        parent[s] = None
        queue = [s]
        for x in queue:
            for y, e in adj[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    parent[y] = (x, e)
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return _close_cycle(x, y, e, parent)
    return None


def _close_cycle(x: int, y: int, e: Edge, parent) -> tuple[list[int], list[Edge]]:
    def chain(z: int) -> list[tuple[int, Edge | None]]:
        out = [(z, None)]
        while parent[out[-1][0]] is not None:
            p, pe = parent[out[-1][0]]
            out[-1] = (out[-1][0], pe)
            out.append((p, None))
        return out

    cx, cy = chain(x), chain(y)
    xs = [v for v, _ in cx]
    ys = [v for v, _ in cy]
    common = next(v for v in xs if v in ys)
    ix, iy = xs.index(common), ys.index(common)
    # walk common -> ... -> x, cross e, y -> ... -> common
    down = cx[:ix][::-1]  # from just below common up to x
    verts = [common] + [v for v, _ in down]
    links = [pe for _, pe in down]
    up = cy[:iy]
    verts += [v for v, _ in up]
    links += [e] + [pe for _, pe in up]
    # links[i] joins verts[i] and verts[i+1]; the last closes the cycle
    return verts, links


# --- back-cuts -------------------------------------------------------------


def clean_back_cut(d: Digraph, arc: Arc, f: frozenset[Edge] | None = None) -> BackCut:
    """The smallest clean back-cut for ``arc``.

    Any such side A contains the tail, is closed under following arcs other
    than ``arc`` forwards and arcs of F backwards, and misses the head; the
    closure of the tail under those two rules is therefore the answer when it
    misses the head, and otherwise none exists.
    """
    if f is None:
        f = critical_edges(underlying(d), "nonplanar")
    u, v = arc
    if arc not in d.arcs:
        raise ValueError(f"{arc} is not an arc")
    side = {u}
    todo = [u]
    while todo:
        x = todo.pop()
        nxt = [y for y in d.succ[x] if (x, y) != arc]
        nxt += [y for y in d.pred[x] if edge(x, y) in f]
        for y in nxt:
            if y not in side:
                side.add(y)
                todo.append(y)
    if v in side:
        raise LookupError(f"no clean back-cut for {arc}")
    cut = delta(d, side)
    return BackCut(cut, arc, True)


def back_cuts_by_search(d: Digraph, arc: Arc, f: frozenset[Edge]) -> list[BackCut]:
    """Every back-cut for ``arc`` by scanning vertex subsets (desk scale)."""
    u, v = arc
    others = [x for x in d.vertices if x not in (u, v)]
    out = []
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            cut = delta(d, (u, *extra))
            if cut.out_arcs == {arc}:
                clean = not any(edge(*a) in f for a in cut.in_arcs)
                out.append(BackCut(cut, arc, clean))
    return out


# --- good orientations -----------------------------------------------------


def _orientations_from_cells(g: Graph, f: frozenset[Edge]) -> Iterator[Digraph] | None:
    cells = compute_cells(g, f)
    if any(c.orientation is None for c in cells):
        return None
    covered = set().union(*(c.edges for c in cells)) if cells else set()
    free = sorted(g.edges - covered)

    def gen() -> Iterator[Digraph]:
        choices = [c.orientations() for c in cells]
        # fixing the first factor keeps one of each reversal pair
        if choices:
            choices[0] = choices[0][:1]
        free_choices = [((a, b), (b, a)) for a, b in free]
        if not choices and free_choices:
            free_choices[0] = free_choices[0][:1]
        for picked in itertools.product(*choices):
            base = [a for arcs in picked for a in arcs]
            for fr in itertools.product(*free_choices):
                yield Digraph(g.vertex_count, frozenset(base) | frozenset(fr))

    return gen()


def _orientations_brute(g: Graph) -> Iterator[Digraph]:
    edges = g.sorted_edges()
    if len(edges) > BRUTE_EDGE_CAP:
        raise SizeCapError(f"{len(edges)} edges; full orientation sweep is capped at {BRUTE_EDGE_CAP}")
    if not edges:
        return
    first = edges[0]
    for bits in itertools.product((0, 1), repeat=len(edges) - 1):
        arcs = [first] + [(a, b) if s == 0 else (b, a) for (a, b), s in zip(edges[1:], bits)]
        yield Digraph(g.vertex_count, frozenset(arcs))


def good_orientations(g: Graph, method: str = "cells") -> list[Orientation]:
    """All good orientations of g, one from each reversal pair, sorted."""
    if method == "cells":
        f = critical_edges(g, "nonplanar")
        it = _orientations_from_cells(g, f)
        if it is None:
            return []
    elif method == "brute":
        it = _orientations_brute(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    if g.num_edges > MINIMALITY_ARC_CAP:
        raise SizeCapError(
            f"{g.num_edges} edges; Kuratowski minimality search is capped at {MINIMALITY_ARC_CAP}"
        )
    found = [d for d in it if is_strong(d) and is_kuratowski_digraph(d)]
    found.sort(key=lambda d: d.sorted_arcs())
    return [Orientation.from_digraph(g, d) for d in found]


def find_good_orientation(g: Graph, method: str = "cells") -> Orientation | None:
    """Some good orientation of g, or None."""
    if method == "cells":
        f = critical_edges(g, "nonplanar")
        it = _orientations_from_cells(g, f)
        if it is None:
            return None
    elif method == "brute":
        it = _orientations_brute(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    if g.num_edges > MINIMALITY_ARC_CAP:
        raise SizeCapError(
            f"{g.num_edges} edges; Kuratowski minimality search is capped at {MINIMALITY_ARC_CAP}"
        )
    for d in it:
        if is_strong(d) and is_kuratowski_digraph(d):
            return Orientation.from_digraph(g, d)
    return None


# --- parity predicates -----------------------------------------------------


def spine(forest: CriticalForest) -> list[int] | None:
    """The unique minimal path of a spanning tree meeting all its edges, or
    None when the tree is not a caterpillar (or the path is not unique)."""
    n = forest.host.vertex_count
    if not forest.is_spanning_tree or n < 3:
        return None
    deg = {v: forest.degree(v) for v in range(n)}
    inner = [v for v in range(n) if deg[v] >= 2]
    if len(inner) == 1:
        return inner
    inner_set = set(inner)
    ends = [v for v in inner if sum(1 for e in forest.f if v in e and (set(e) - {v}) <= inner_set) == 1]
    if len(ends) != 2:
        return None
    path = tree_path(n, forest.f, ends[0], ends[1])
    return path if path is not None and set(path) == inner_set else None


def even_degree_condition(forest: CriticalForest) -> bool:
    """Whenever uv, vw are critical and u, v, w all have T-degree >= 2, v's is even."""
    deg = {v: forest.degree(v) for v in forest.host.vertices}
    nbrs: dict[int, list[int]] = {v: [] for v in forest.host.vertices}
    for a, b in forest.f:
        nbrs[a].append(b)
        nbrs[b].append(a)
    for v in forest.host.vertices:
        if deg[v] < 2 or deg[v] % 2 == 0:
            continue
        big = [x for x in nbrs[v] if deg[x] >= 2]
        if len(big) >= 2:
            return False
    return True


def spine_condition(forest: CriticalForest) -> bool:
    """Every spine vertex has even T-degree; False when there is no spine."""
    sp = spine(forest)
    return sp is not None and all(forest.degree(v) % 2 == 0 for v in sp)


def no_P4_condition(forest: CriticalForest) -> bool:
    """T has no path on four vertices, i.e. every component is a star."""
    deg = {v: forest.degree(v) for v in forest.host.vertices}
    return all(min(deg[a], deg[b]) <= 1 for a, b in forest.f)


def mussel_parity(lengths: tuple[int, int, int]) -> bool:
    return len({x % 2 for x in lengths}) == 1


def double_wheel_parity(base_cycle_length: int) -> bool:
    return base_cycle_length % 2 == 0


def parity_predicates(g: Graph, cert: FamilyCertificate | None = None) -> dict[str, bool | None]:
    """Each condition evaluated on the structure at hand; None where the
    needed structure (spanning tree, mussel paths, base cycle) is absent."""
    forest = CriticalForest.of(g)
    out: dict[str, bool | None] = {
        "even_degree_condition": even_degree_condition(forest),
        "no_P4_condition": no_P4_condition(forest),
        "spine_condition": spine_condition(forest) if forest.is_spanning_tree else None,
        "mussel_parity": None,
        "double_wheel_parity": None,
    }
    if cert is not None:
        spec = cert.spec
        if isinstance(spec, MusselSpec):
            out["mussel_parity"] = mussel_parity((spec.p, spec.q, spec.r))
        elif isinstance(spec, DoubleWheelSpec):
            out["double_wheel_parity"] = double_wheel_parity(spec.n)
        elif isinstance(spec, MobiusChainSpec):
            pass
    return out


def is_proper_double_wheel(g: Graph, cert: FamilyCertificate) -> bool:
    """Every spoke (centre to base-cycle edge) is critical."""
    spec = cert.spec
    if not isinstance(spec, DoubleWheelSpec):
        raise ValueError("not a double-wheel certificate")
    f = critical_edges(g, "nonplanar")
    n = spec.n
    m = cert.mapping
    spokes = [edge(m[x], m[n]) for x in spec.u_nbrs] + [edge(m[x], m[n + 1]) for x in spec.v_nbrs]
    return all(e in f for e in spokes)


def has_even_centre_path(spec: DoubleWheelSpec) -> bool:
    """Some stretch of the base cycle between consecutive neighbours of one
    centre has a positive even number of interior vertices adjacent to the
    other centre."""
    n = spec.n
    for a_nbrs, b_nbrs in ((spec.u_nbrs, spec.v_nbrs), (spec.v_nbrs, spec.u_nbrs)):
        a_sorted, b_set = sorted(a_nbrs), set(b_nbrs)
        for x, y in zip(a_sorted, a_sorted[1:] + [a_sorted[0] + n]):
            hits = sum(1 for z in range(x + 1, y) if z % n in b_set)
            if hits and hits % 2 == 0:
                return True
    return False
