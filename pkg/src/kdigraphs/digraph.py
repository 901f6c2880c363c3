"""Simple digon-free digraphs: strongness, suppression, subdivision and cuts."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .graph import Edge, Graph, components, edge

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """A digraph on ``0 .. vertex_count - 1`` with no loops, repeated arcs or digons."""

    vertex_count: int
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"arc {(u, v)} out of range for {self.vertex_count} vertices")
            if (v, u) in self.arcs:
                raise ValueError(f"digon between {u} and {v}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        seen: set[Arc] = set()
        for a in arcs:
            a = (int(a[0]), int(a[1]))
            if a in seen:
                raise ValueError(f"duplicate arc {a}")
            seen.add(a)
        return cls(n, frozenset(seen))

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.vertex_count
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        out = [0] * self.vertex_count
        for u, v in self.arcs:
            out[v] |= 1 << u
        return tuple(out)

    @cached_property
    def succ(self) -> tuple[frozenset[int], ...]:
        return tuple(_bits(m) for m in self.out_masks)

    @cached_property
    def pred(self) -> tuple[frozenset[int], ...]:
        return tuple(_bits(m) for m in self.in_masks)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def remove_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        return Digraph(self.vertex_count, self.arcs - frozenset(arcs))

    def relabel(self, perm: list[int]) -> "Digraph":
        return Digraph(self.vertex_count, frozenset((perm[u], perm[v]) for u, v in self.arcs))

    def reverse(self) -> "Digraph":
        return Digraph(self.vertex_count, frozenset((v, u) for u, v in self.arcs))

    def induced_on_support(self) -> tuple["Digraph", list[int]]:
        """Drop isolated vertices and relabel densely."""
        keep = sorted({x for a in self.arcs for x in a})
        index = {v: i for i, v in enumerate(keep)}
        return Digraph(len(keep), frozenset((index[u], index[v]) for u, v in self.arcs)), keep


def _bits(m: int) -> frozenset[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return frozenset(out)


@dataclass(frozen=True)
class Orientation:
    """One direction for each edge of ``base``; ``direction[e]`` is an ordered pair."""

    base: Graph
    direction: Mapping[Edge, Arc]

    def __post_init__(self) -> None:
        if set(self.direction) != set(self.base.edges):
            raise ValueError("an orientation must direct every edge exactly once")
        for e, a in self.direction.items():
            if edge(*a) != e:
                raise ValueError(f"{a} does not orient {e}")

    @classmethod
    def from_digraph(cls, base: Graph, d: Digraph) -> "Orientation":
        return cls(base, {edge(u, v): (u, v) for u, v in d.arcs})

    def digraph(self) -> Digraph:
        return Digraph(self.base.vertex_count, frozenset(self.direction.values()))

    def reversed(self) -> "Orientation":
        return Orientation(self.base, {e: (a[1], a[0]) for e, a in self.direction.items()})

    def __hash__(self) -> int:
        return hash((self.base, frozenset(self.direction.values())))


@dataclass(frozen=True)
class CutCertificate:
    side_A: frozenset[int]
    out_arcs: frozenset[Arc]
    in_arcs: frozenset[Arc]

    def check(self, d: Digraph) -> None:
        fresh = delta(d, self.side_A)
        if fresh != self:
            raise ValueError("crossing arcs do not match the host digraph")

    def to_json(self) -> dict:
        return {
            "side_A": sorted(self.side_A),
            "out_arcs": [list(a) for a in sorted(self.out_arcs)],
            "in_arcs": [list(a) for a in sorted(self.in_arcs)],
        }


def delta(d: Digraph, x: Iterable[int]) -> CutCertificate:
    side = frozenset(x)
    if not side or len(side) >= d.vertex_count or any(not 0 <= v < d.vertex_count for v in side):
        raise ValueError("a cut side must be a proper nonempty vertex subset")
    out = frozenset((u, v) for u, v in d.arcs if u in side and v not in side)
    inn = frozenset((u, v) for u, v in d.arcs if v in side and u not in side)
    return CutCertificate(side, out, inn)


# --- strong connectivity ---------------------------------------------------


def _reach(masks: tuple[int, ...], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = masks[low.bit_length() - 1] & allowed & ~seen
        seen |= new
        frontier |= new
    return seen


def is_strong(d: Digraph) -> bool:
    n = d.vertex_count
    if n <= 1:
        return True
    full = (1 << n) - 1
    return _reach(d.out_masks, 0, full) == full and _reach(d.in_masks, 0, full) == full


def is_strong_on_support(d: Digraph) -> bool:
    """Strong after discarding isolated vertices (and false when arcless)."""
    support = 0
    for u, v in d.arcs:
        support |= 1 << u | 1 << v
    if not support:
        return False
    start = (support & -support).bit_length() - 1
    return (
        _reach(d.out_masks, start, support) == support
        and _reach(d.in_masks, start, support) == support
    )


def underlying(d: Digraph) -> Graph:
    return Graph(d.vertex_count, frozenset(edge(u, v) for u, v in d.arcs))


# --- subdivision and suppression ------------------------------------------


def subdivide(d: Digraph, arc: Arc, length: int) -> Digraph:
    """Replace ``arc`` by a directed path with ``length`` arcs through new vertices."""
    if arc not in d.arcs:
        raise ValueError(f"{arc} is not an arc")
    if length < 1:
        raise ValueError("length must be at least 1")
    if length == 1:
        return d
    n = d.vertex_count
    u, v = arc
    chain = [u, *range(n, n + length - 1), v]
    arcs = (d.arcs - {arc}) | frozenset(zip(chain, chain[1:]))
    return Digraph(n + length - 1, arcs)


def suppressible(d: Digraph, w: int) -> tuple[int, int] | None:
    """The arc ``(u, v)`` that would replace ``w``, if ``w`` can be suppressed."""
    if len(d.pred[w]) != 1 or len(d.succ[w]) != 1:
        return None
    (u,), (v,) = d.pred[w], d.succ[w]
    if u == v or (u, v) in d.arcs or (v, u) in d.arcs:
        return None
    return u, v


def suppress(d: Digraph, rng: random.Random | None = None) -> Digraph:
    """Suppress in/out-degree (1,1) vertices until none can go without a digon
    or a repeated arc.  Survivors keep their relative order.

    ``rng`` shuffles the order in which candidates are tried.
    """
    return suppress_with_paths(d, rng)[0]


def suppress_with_paths(
    d: Digraph, rng: random.Random | None = None
) -> tuple[Digraph, list[int], dict[Arc, tuple[int, ...]]]:
    """As :func:`suppress`, also returning the surviving original vertex ids
    and, per arc of the result, the directed path of ``d`` it stands for
    (in original ids)."""
    paths: dict[Arc, tuple[int, ...]] = {a: a for a in d.arcs}
    succ = {v: set(d.succ[v]) for v in d.vertices}
    pred = {v: set(d.pred[v]) for v in d.vertices}
    changed = True
    while changed:
        changed = False
        order = sorted(succ)
        if rng is not None:
            rng.shuffle(order)
        for w in order:
            if len(pred[w]) != 1 or len(succ[w]) != 1:
                continue
            (u,) = pred[w]
            (v,) = succ[w]
            if u == v or v in succ[u] or u in succ[v]:
                continue
            paths[(u, v)] = paths.pop((u, w)) + paths.pop((w, v))[1:]
            succ[u].discard(w)
            pred[v].discard(w)
            succ[u].add(v)
            pred[v].add(u)
            del succ[w], pred[w]
            changed = True
            break
    keep = sorted(succ)
    index = {v: i for i, v in enumerate(keep)}
    arcs = frozenset((index[u], index[v]) for u, v in paths)
    return (
        Digraph(len(keep), arcs),
        keep,
        {(index[u], index[v]): p for (u, v), p in paths.items()},
    )


def is_suppression_stable(d: Digraph) -> bool:
    return all(suppressible(d, w) is None for w in d.vertices)


# --- the two cut lemmas ----------------------------------------------------


def directed_cycle_count(d: Digraph, arc: Arc) -> int:
    """Number of directed cycles through ``arc`` (exponential; desk scale only)."""
    u, v = arc
    count = 0
    stack = [(v, 1 << v)]
    while stack:
        x, used = stack.pop()
        if x == u:
            count += 1
            continue
        for y in d.succ[x]:
            if not used >> y & 1:
                stack.append((y, used | 1 << y))
    return count


def deletable_cycle_edge(d: Digraph, cycle: list[int]) -> Arc | CutCertificate:
    """An arc of the cycle whose deletion keeps ``d`` strong, or else a cut
    with exactly one arc leaving and one arc entering its side."""
    if not is_strong(d):
        raise ValueError("digraph is not strong")
    k = len(cycle)
    if k < 3:
        raise ValueError("not a cycle")
    cyc_arcs = []
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        if (a, b) in d.arcs:
            cyc_arcs.append((a, b))
        elif (b, a) in d.arcs:
            cyc_arcs.append((b, a))
        else:
            raise ValueError(f"{a}-{b} is not an edge of the underlying graph")
    for a in sorted(cyc_arcs):
        if is_strong(d.remove_arcs([a])):
            return a
    e = min(sorted(cyc_arcs), key=lambda a: directed_cycle_count(d, a))
    rest = d.remove_arcs([e])
    full = (1 << d.vertex_count) - 1
    # e is the only arc leaving whatever the tail still reaches without it
    side = _reach(rest.out_masks, e[0], full)
    cut = delta(d, [v for v in d.vertices if side >> v & 1])
    if len(cut.out_arcs) != 1 or len(cut.in_arcs) != 1:
        for size in range(1, d.vertex_count):
            for sub in itertools.combinations(d.vertices, size):
                c = delta(d, sub)
                if len(c.out_arcs) == 1 and len(c.in_arcs) == 1:
                    return c
        raise RuntimeError("no deletable arc and no single-arc cut")
    return cut


def paths_across_2cut(d: Digraph, u: int, v: int) -> list[list[int]]:
    """One directed u-v or v-u path of length >= 2 per component of G^- - {u, v}."""
    if not is_strong(d):
        raise ValueError("digraph is not strong")
    g = underlying(d)
    full = (1 << d.vertex_count) - 1
    comps = components(g, full & ~(1 << u) & ~(1 << v))
    if len(comps) < 2:
        raise ValueError(f"{{{u}, {v}}} does not separate the underlying graph")
    out = []
    for comp in comps:
        allowed = set(comp)
        path = _directed_path(d, u, v, allowed) or _directed_path(d, v, u, allowed)
        if path is None:
            raise ValueError("no directed path through a component; precondition violated")
        out.append(path)
    return out


def _directed_path(d: Digraph, s: int, t: int, interior: set[int]) -> list[int] | None:
    prev = {s: s}
    queue = [s]
    for x in queue:
        for y in sorted(d.succ[x]):
            if y == t and x != s:
                path = [t, x]
                while path[-1] != s:
                    path.append(prev[path[-1]])
                return path[::-1]
            if y in interior and y not in prev:
                prev[y] = x
                queue.append(y)
    return None
