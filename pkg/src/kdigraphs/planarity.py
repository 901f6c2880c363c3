"""Left-right planarity test, Kuratowski subgraph extraction, outerplanarity.

The test follows Brandes' formulation of the de Fraysseix-Rosenstiehl
left-right criterion (testing phase only; no embedding is built).
"""

from __future__ import annotations

import sys
from functools import lru_cache

from .graph import Edge, Graph, complete_bipartite, complete_graph, edge
from .witness import SubdivisionWitness


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: Edge | None = None, high: Edge | None = None) -> None:
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _Pair:
    __slots__ = ("left", "right")

    def __init__(self, left: _Interval | None = None, right: _Interval | None = None) -> None:
        self.left = left or _Interval()
        self.right = right or _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRTest:
    def __init__(self, n: int, adj: list[list[int]]) -> None:
        self.n = n
        self.adj = adj
        self.height: list[int | None] = [None] * n
        self.parent_edge: list[Edge | None] = [None] * n
        self.lowpt: dict[Edge, int] = {}
        self.lowpt2: dict[Edge, int] = {}
        self.nesting: dict[Edge, int] = {}
        self.oriented: set[Edge] = set()
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.S: list[_Pair] = []
        self.stack_bottom: dict[Edge, _Pair | None] = {}
        self.lowpt_edge: dict[Edge, Edge] = {}
        self.ref: dict[Edge, Edge | None] = {}

    def run(self) -> bool:
        roots = []
        for v in range(self.n):
            if self.height[v] is None:
                self.height[v] = 0
                roots.append(v)
                self._orient(v)
        for v in range(self.n):
            self.out[v].sort(key=lambda w, v=v: self.nesting[(v, w)])
        for r in roots:
            if not self._test(r):
                return False
        return True

    def _orient(self, v: int) -> None:
        e = self.parent_edge[v]
        for w in self.adj[v]:
            if (v, w) in self.oriented or (w, v) in self.oriented:
                continue
            vw = (v, w)
            self.oriented.add(vw)
            self.out[v].append(w)
            self.lowpt[vw] = self.lowpt2[vw] = self.height[v]
            if self.height[w] is None:
                self.parent_edge[w] = vw
                self.height[w] = self.height[v] + 1
                self._orient(w)
            else:
                self.lowpt[vw] = self.height[w]
            self.nesting[vw] = 2 * self.lowpt[vw] + (1 if self.lowpt2[vw] < self.height[v] else 0)
            if e is not None:
                if self.lowpt[vw] < self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                    self.lowpt[e] = self.lowpt[vw]
                elif self.lowpt[vw] > self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                else:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    def _top(self) -> _Pair | None:
        return self.S[-1] if self.S else None

    def _conflicting(self, iv: _Interval, b: Edge) -> bool:
        return not iv.empty() and self.lowpt[iv.high] > self.lowpt[b]

    def _lowest(self, p: _Pair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]
        if p.right.empty():
            return self.lowpt[p.left.low]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])

    def _test(self, v: int) -> bool:
        e = self.parent_edge[v]
        first = self.out[v][0] if self.out[v] else None
        for w in self.out[v]:
            ei = (v, w)
            self.stack_bottom[ei] = self._top()
            if ei == self.parent_edge[w]:
                if not self._test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                self.S.append(_Pair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if w == first:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
        if e is not None:
            u = e[0]
            self._trim_back_edges(u)
            if self.lowpt[e] < self.height[u]:
                top = self._top()
                hl = top.left.high if top else None
                hr = top.right.high if top else None
                if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                    self.ref[e] = hl
                else:
                    self.ref[e] = hr
        return True

    def _add_constraints(self, ei: Edge, e: Edge) -> bool:
        p = _Pair()
        while True:
            q = self.S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                return False
            if self.lowpt[q.right.low] > self.lowpt[e]:
                if p.right.empty():
                    p.right = q.right.copy()
                else:
                    self.ref[p.right.low] = q.right.high
                p.right.low = q.right.low
            else:
                self.ref[q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        while self.S and (
            self._conflicting(self.S[-1].left, ei) or self._conflicting(self.S[-1].right, ei)
        ):
            q = self.S.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                return False
            if p.right.low is not None:
                self.ref[p.right.low] = q.right.high
            if q.right.low is not None:
                p.right.low = q.right.low
            if p.left.empty():
                p.left = q.left.copy()
            else:
                self.ref[p.left.low] = q.left.high
            p.left.low = q.left.low
        if not (p.left.empty() and p.right.empty()):
            self.S.append(p)
        return True

    def _trim_back_edges(self, u: int) -> None:
        while self.S and self._lowest(self.S[-1]) == self.height[u]:
            self.S.pop()
        if self.S:
            p = self.S.pop()
            while p.left.high is not None and p.left.high[1] == u:
                p.left.high = self.ref.get(p.left.high)
            if p.left.high is None and p.left.low is not None:
                self.ref[p.left.low] = p.right.low
                p.left.low = None
            while p.right.high is not None and p.right.high[1] == u:
                p.right.high = self.ref.get(p.right.high)
            if p.right.high is None and p.right.low is not None:
                self.ref[p.right.low] = p.left.low
                p.right.low = None
            self.S.append(p)


def planar_edges(n: int, edges: frozenset[Edge]) -> bool:
    """Planarity of the graph on ``n`` vertices with the given edge set."""
    return _planar_cached(n, edges)


@lru_cache(maxsize=1 << 17)
def _planar_cached(n: int, edges: frozenset[Edge]) -> bool:
    m = len(edges)
    if m < 9:
        return True  # K5 has 10 edges, K3,3 has 9
    active = {v for e in edges for v in e}
    if m > 3 * len(active) - 6:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(edges):
        adj[u].append(v)
        adj[v].append(u)
    if n > 900:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n))
    return _LRTest(n, adj).run()


def is_planar(g: Graph) -> bool:
    return planar_edges(g.vertex_count, g.edges)


def is_outerplanar(g: Graph) -> bool:
    """Outerplanar iff adding an apex joined to every vertex keeps it planar."""
    return is_planar(g.add_vertex(g.vertices))


def kuratowski_subgraph(g: Graph) -> SubdivisionWitness | None:
    """A K5 or K3,3 subdivision in g, or None when g is planar."""
    if is_planar(g):
        return None
    n = g.vertex_count
    kept = set(g.edges)
    for e in sorted(g.edges):
        trial = frozenset(kept - {e})
        if not planar_edges(n, trial):
            kept.discard(e)
    sub = Graph(n, frozenset(kept))
    branch = sorted(v for v in sub.vertices if sub.degree(v) >= 3)
    threads = _threads(sub, set(branch))
    by_pair = {edge(p[0], p[-1]): p for p in threads}
    if len(branch) == 5:
        pattern = complete_graph(5)
        bmap = tuple(branch)
    else:
        # two-colour the branch vertices through the threads
        side = {branch[0]: 0}
        todo = [branch[0]]
        while todo:
            x = todo.pop()
            for p in threads:
                for a, b in ((p[0], p[-1]), (p[-1], p[0])):
                    if a == x and b not in side:
                        side[b] = 1 - side[x]
                        todo.append(b)
        left = sorted(v for v in branch if side[v] == 0)
        right = sorted(v for v in branch if side[v] == 1)
        pattern = complete_bipartite(3, 3)
        bmap = tuple(left + right)
    paths = {}
    for a, b in pattern.sorted_edges():
        p = by_pair[edge(bmap[a], bmap[b])]
        paths[(a, b)] = tuple(p if p[0] == bmap[a] else p[::-1])
    return SubdivisionWitness(pattern, bmap, paths)


def _threads(g: Graph, branch: set[int]) -> list[list[int]]:
    seen: set[Edge] = set()
    out = []
    for b in sorted(branch):
        for w in sorted(g.adj[b]):
            if edge(b, w) in seen:
                continue
            path = [b, w]
            seen.add(edge(b, w))
            while path[-1] not in branch:
                x = path[-1]
                (y,) = [y for y in g.adj[x] if y != path[-2]]
                seen.add(edge(x, y))
                path.append(y)
            out.append(path)
    return out
