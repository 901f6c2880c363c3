"""Simple undirected graphs and the structural helpers built on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]
EdgeSet = frozenset  # frozenset[Edge], always a subset of some host's edges


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices ``0 .. vertex_count - 1``.

    Edges are stored normalised as ``(min, max)`` pairs.  Construct through
    :meth:`from_edges` to get loop/duplicate rejection on raw input.
    """

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not u < v:
                raise ValueError(f"edge {(u, v)} is not normalised")
            if v >= self.vertex_count or u < 0:
                raise ValueError(f"edge {(u, v)} out of range for {self.vertex_count} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, frozenset())

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = [0] * self.vertex_count
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        drop = {edge(u, v) for u, v in edges}
        return Graph(self.vertex_count, self.edges - drop)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.vertex_count, list(self.edges) + [edge(u, v) for u, v in edges])

    def add_vertex(self, neighbours: Iterable[int] = ()) -> "Graph":
        n = self.vertex_count
        return Graph(n + 1, self.edges | {(v, n) for v in neighbours})

    def remove_vertices(self, drop: Iterable[int]) -> tuple["Graph", list[int]]:
        """Delete vertices and relabel densely; returns the graph and old ids in new order."""
        dropped = set(drop)
        keep = [v for v in self.vertices if v not in dropped]
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            edge(index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(keep), edges), keep

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.vertex_count, frozenset(edge(perm[u], perm[v]) for u, v in self.edges))

    def non_isolated(self) -> list[int]:
        return [v for v in self.vertices if self.adj[v]]


# --- named graphs ----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def wheel_graph(k: int) -> Graph:
    """Rim ``0..k-1`` and hub ``k``."""
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + [(i, k) for i in range(k)])


def mobius_ladder(k: int) -> Graph:
    """The k-rung Mobius ladder: a 2k-cycle with opposite vertices joined."""
    if k < 2:
        raise ValueError("a Mobius ladder needs at least two rungs")
    n = 2 * k
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)])


# --- connectivity ----------------------------------------------------------


def _component_mask(masks: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        new = masks[v] & allowed & ~seen
        seen |= new
        frontier |= new
    return seen


def is_connected(g: Graph, allowed: int | None = None) -> bool:
    if allowed is None:
        allowed = (1 << g.vertex_count) - 1
    if allowed == 0:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return _component_mask(g.masks, start, allowed) == allowed


def components(g: Graph, allowed: int | None = None) -> list[list[int]]:
    if allowed is None:
        allowed = (1 << g.vertex_count) - 1
    out = []
    rest = allowed
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = _component_mask(g.masks, start, rest)
        rest &= ~comp
        out.append([v for v in range(g.vertex_count) if comp >> v & 1])
    return out


def connectivity_level(g: Graph) -> int:
    """min(3, vertex connectivity), with kappa(K_n) = n - 1."""
    n = g.vertex_count
    full = (1 << n) - 1
    for k in range(3):
        for cut in itertools.combinations(range(n), k):
            if n - k < 2:
                return k
            allowed = full
            for v in cut:
                allowed &= ~(1 << v)
            if not is_connected(g, allowed):
                return k
    return 3


def is_forest(n: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def has_F_cycle(g: Graph, f: Iterable[Edge]) -> bool:
    f = frozenset(f)
    if not f <= g.edges:
        raise ValueError("F must be a subset of the graph's edges")
    return not is_forest(g.vertex_count, f)


def forest_components(n: int, f: Iterable[Edge]) -> list[frozenset[int]]:
    """Vertex sets of the components of (V, f) that contain at least one edge."""
    g = Graph(n, frozenset(f))
    return [frozenset(c) for c in components(g) if len(c) > 1]


def tree_path(n: int, f: Iterable[Edge], s: int, t: int) -> list[int] | None:
    """Vertex sequence of the unique s-t path in the forest (V, f), or None."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in f:
        adj[u].append(v)
        adj[v].append(u)
    prev = {s: s}
    stack = [s]
    while stack:
        x = stack.pop()
        if x == t:
            break
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    if t not in prev:
        return None
    path = [t]
    while path[-1] != s:
        path.append(prev[path[-1]])
    return path[::-1]


def simple_cycles(g: Graph) -> Iterator[list[int]]:
    """Every cycle of g once, as a vertex sequence starting at its least vertex."""
    n = g.vertex_count
    for s in range(n):
        # paths s -> ... with all vertices > s; close when back at s.
        stack = [(s, [s], 1 << s)]
        while stack:
            v, path, used = stack.pop()
            for w in g.adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield list(path)
                elif w > s and not used >> w & 1:
                    stack.append((w, path + [w], used | 1 << w))


# --- K4 subdivisions via series-parallel reduction ------------------------


def has_k4_subdivision(g: Graph) -> bool:
    """True iff g contains a subdivision of K4.

    Uses the classical reduction: a graph has no K4 subdivision iff repeatedly
    deleting vertices of degree <= 1, suppressing degree-2 vertices and merging
    parallel edges empties it.
    """
    nbr: dict[int, set[int]] = {v: set(g.adj[v]) for v in g.vertices}
    stack = list(nbr)
    while stack:
        v = stack.pop()
        if v not in nbr:
            continue
        d = len(nbr[v])
        if d <= 1:
            for w in nbr.pop(v):
                nbr[w].discard(v)
                stack.append(w)
        elif d == 2:
            a, b = nbr.pop(v)
            nbr[a].discard(v)
            nbr[b].discard(v)
            nbr[a].add(b)
            nbr[b].add(a)
            stack.extend((a, b))
    return bool(nbr)


def recognize_wheel_subdivision(g: Graph) -> tuple[int, int, list[int]] | None:
    """Return ``(k, hub, rim)`` if g is a subdivision of a k-wheel (k >= 3).

    ``rim`` is the rim cycle as a vertex sequence of g, subdivision vertices
    included.
    """
    branch = [v for v in g.vertices if g.degree(v) >= 3]
    if any(g.degree(v) < 2 for v in g.vertices) or len(branch) < 4:
        return None
    threads = _branch_threads(g, set(branch))
    if threads is None:
        return None
    pairs: dict[tuple[int, int], list[list[int]]] = {}
    for p in threads:
        pairs.setdefault(edge(p[0], p[-1]), []).append(p)
    if any(len(v) > 1 for v in pairs.values()) or any(p[0] == p[-1] for p in threads):
        return None
    k = len(branch) - 1
    if len(threads) != 2 * k:
        return None
    hubs = [v for v in branch if g.degree(v) == k] if k > 3 else branch
    for hub in hubs:
        rim_branch = [v for v in branch if v != hub]
        if any(g.degree(v) != 3 for v in rim_branch):
            continue
        if not all(edge(hub, r) in pairs for r in rim_branch):
            continue
        # rim threads: those not touching the hub must form a single cycle
        rim_threads = [p for p in threads if hub not in (p[0], p[-1])]
        rim_adj: dict[int, list[int]] = {v: [] for v in rim_branch}
        for i, p in enumerate(rim_threads):
            rim_adj[p[0]].append(i)
            rim_adj[p[-1]].append(i)
        if any(len(v) != 2 for v in rim_adj.values()):
            continue
        start = rim_branch[0]
        rim = [start]
        cur, used = start, -1
        for _ in range(k):
            i = rim_adj[cur][0] if rim_adj[cur][0] != used else rim_adj[cur][1]
            p = rim_threads[i]
            p = p if p[0] == cur else p[::-1]
            rim.extend(p[1:])
            cur, used = p[-1], i
        if cur != start or len(set(rim[:-1])) != len(rim) - 1:
            continue
        return k, hub, rim[:-1]
    return None


def _branch_threads(g: Graph, branch: set[int]) -> list[list[int]] | None:
    """Maximal paths whose interiors have degree 2 and whose ends are branch vertices."""
    seen_edges: set[Edge] = set()
    threads = []
    for b in sorted(branch):
        for w in sorted(g.adj[b]):
            if edge(b, w) in seen_edges:
                continue
            path = [b, w]
            seen_edges.add(edge(b, w))
            while path[-1] not in branch:
                x = path[-1]
                nxt = [y for y in g.adj[x] if y != path[-2]]
                if len(nxt) != 1:
                    return None
                seen_edges.add(edge(x, nxt[0]))
                path.append(nxt[0])
            threads.append(path)
    if len(seen_edges) != g.num_edges:
        return None  # a cycle component with no branch vertex
    return threads
