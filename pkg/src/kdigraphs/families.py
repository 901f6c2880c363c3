"""The seven almost-planar families, the graphs U8, V8 and W8, and the classifier.

Every generator numbers the base cycle first and the extra vertices last.
Recognizers propose role assignments, rebuild the graph from the derived
parameters and accept only on an exact edge-set match, so a certificate is
always re-checkable by regeneration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, ClassVar, Iterator, Union

from .graph import (
    Edge,
    Graph,
    complete_graph,
    connectivity_level,
    edge,
    has_F_cycle,
    is_connected,
    mobius_ladder,
)
from .planarity import is_planar
from .topological import SizeCapError, critical_edges

RECOGNIZER_VERTEX_CAP = 24

FAMILIES = ("mobius-chain", "double-wheel", "conch", "mussel", "scallop", "clam", "whelk")


class ClassificationGap(RuntimeError):
    """An almost-planar graph matched none of the seven families."""


# --- parameter records ---------------------------------------------------


@dataclass(frozen=True)
class MobiusChainSpec:
    """Base cycle ``0..n-1``; chords as pairs of cycle positions."""

    n: int
    chords: tuple[tuple[int, int], ...]
    family: ClassVar[str] = "mobius-chain"


@dataclass(frozen=True)
class DoubleWheelSpec:
    """Base cycle ``0..n-1``; centres ``u = n`` and ``v = n + 1``."""

    n: int
    u_nbrs: tuple[int, ...]
    v_nbrs: tuple[int, ...]
    family: ClassVar[str] = "double-wheel"


@dataclass(frozen=True)
class ConchSpec:
    """Paths P, Q between p1 and p2 and R between p2 and p3, of lengths p, q, r.

    Vertex 0 is p1, then the interior of P, then p2 at position ``p``, then the
    interior of Q back towards p1, then the interior of R from p2 onward, and
    p3 last.  Every interior vertex of P and Q is joined to p3 and every
    interior vertex of R to p1; 3-connectivity leaves no other choice.
    """

    p: int
    q: int
    r: int
    p1p2: bool = False
    p1p3: bool = False
    family: ClassVar[str] = "conch"


@dataclass(frozen=True)
class MusselSpec:
    """Tips p1 = 0 and p2, three tip-to-tip paths, hinge p3 last.

    Numbering: P from p1 to p2, Q back to p1 (together the base cycle), then
    the interior of R from p1 towards p2, then the hinge.
    """

    p: int
    q: int
    r: int
    p1p2: bool = False
    p2p3: bool = False
    p1p3: bool = False
    family: ClassVar[str] = "mussel"


@dataclass(frozen=True)
class ScallopSpec:
    """Cycle ``c1..cn`` at ``0..n-1``, then u, v, w.  ``k5`` selects K5 itself."""

    n: int = 0
    wc1: bool = False
    wcn: bool = False
    k5: bool = False
    family: ClassVar[str] = "scallop"


@dataclass(frozen=True)
class ClamSpec:
    """Cycle ``c1..cn`` at ``0..n-1``, then u, v; ``j`` is 1-based."""

    n: int
    j: int
    family: ClassVar[str] = "clam"


@dataclass(frozen=True)
class WhelkSpec:
    """Cycle ``c1..cn`` at ``0..n-1``, then u, v; ``i < j`` are 1-based."""

    n: int
    i: int
    j: int
    family: ClassVar[str] = "whelk"


FamilySpec = Union[
    MobiusChainSpec, DoubleWheelSpec, ConchSpec, MusselSpec, ScallopSpec, ClamSpec, WhelkSpec
]


# --- generators ------------------------------------------------------------


def _cycle(n: int) -> list[Edge]:
    return [edge(i, (i + 1) % n) for i in range(n)]


def _crosses(a: tuple[int, int], b: tuple[int, int], n: int) -> bool:
    """Chords of a cycle on positions ``0..n-1`` with four distinct ends interleave."""
    h, i = sorted(a)
    j, k = b
    if len({h, i, j, k}) < 4:
        return False
    return (h < j < i) != (h < k < i)


def chain_violations(n: int, chords: Iterator[tuple[int, int]] | list) -> list[str]:
    """Reasons a chord list fails the chain rules (planarity is not checked)."""
    chords = [tuple(sorted(c)) for c in chords]
    out = []
    if n < 4:
        out.append("base cycle needs at least 4 vertices")
    for c in chords:
        if not (0 <= c[0] < c[1] < n) or (c[1] - c[0]) % n in (1, n - 1):
            out.append(f"{c} is not a chord")
    if len(set(chords)) != len(chords):
        out.append("repeated chord")
    if out:
        return out
    for a, b in itertools.combinations(chords, 2):
        if not set(a) & set(b) and not _crosses(a, b, n):
            out.append(f"chords {a} and {b} neither cross nor share an end")
    if {v for c in chords for v in c} != set(range(n)):
        out.append("some cycle vertex is on no chord")
    if has_F_cycle(Graph(n, frozenset(chords)), chords):
        out.append("the chords contain a cycle")
    return out


def _chain(spec: MobiusChainSpec) -> Graph:
    bad = chain_violations(spec.n, list(spec.chords))
    if bad:
        raise ValueError("; ".join(bad))
    return Graph.from_edges(spec.n, _cycle(spec.n) + [edge(*c) for c in spec.chords])


def _double_wheel(spec: DoubleWheelSpec) -> Graph:
    n = spec.n
    u, v = n, n + 1
    if n < 3:
        raise ValueError("base cycle needs at least 3 vertices")
    if any(not 0 <= x < n for x in spec.u_nbrs + spec.v_nbrs):
        raise ValueError("neighbour position outside the base cycle")
    if len(set(spec.u_nbrs) & set(spec.v_nbrs)) > 1:
        raise ValueError("at most one base vertex may be adjacent to both centres")
    g = Graph.from_edges(
        n + 2,
        _cycle(n) + [(u, v)] + [(x, u) for x in spec.u_nbrs] + [(x, v) for x in spec.v_nbrs],
    )
    if connectivity_level(g) < 3 or is_planar(g):
        raise ValueError("a double wheel must be 3-connected and nonplanar")
    return g


def _conch_layout(spec: ConchSpec) -> tuple[int, list[int], list[int], list[int], int]:
    p, q, r = spec.p, spec.q, spec.r
    if min(p, q, r) < 3:
        raise ValueError("conch paths need length at least 3")
    P = list(range(0, p + 1))
    Q = list(range(p, p + q)) + [0]
    R = [p] + list(range(p + q, p + q + r - 1)) + [p + q + r - 1]
    return p, P, Q, R, p + q + r - 1


def _conch(spec: ConchSpec) -> Graph:
    p2, P, Q, R, p3 = _conch_layout(spec)
    edges = list(zip(P, P[1:])) + list(zip(Q, Q[1:])) + list(zip(R, R[1:]))
    edges += [(x, p3) for x in P[1:-1] + Q[1:-1]]
    edges += [(0, x) for x in R[1:-1]]
    if spec.p1p2:
        edges.append((0, p2))
    if spec.p1p3:
        edges.append((0, p3))
    return Graph.from_edges(p3 + 1, edges)


def _mussel_layout(spec: MusselSpec) -> tuple[int, list[list[int]], int]:
    p, q, r = spec.p, spec.q, spec.r
    if min(p, q, r) < 3:
        raise ValueError("mussel paths need length at least 3")
    if spec.p1p2 + spec.p2p3 + spec.p1p3 > 2:
        raise ValueError("at most two of p1p2, p2p3, p1p3 may be present")
    P = list(range(0, p + 1))
    Q = [p] + list(range(p + 1, p + q)) + [0]
    R = [0] + list(range(p + q, p + q + r - 1)) + [p]
    hinge = p + q + r - 1
    return p, [P, Q, R], hinge


def _mussel(spec: MusselSpec) -> Graph:
    p2, paths, hinge = _mussel_layout(spec)
    edges = [e for path in paths for e in zip(path, path[1:])]
    edges += [(x, hinge) for path in paths for x in path[1:-1]]
    if spec.p1p2:
        edges.append((0, p2))
    if spec.p2p3:
        edges.append((p2, hinge))
    if spec.p1p3:
        edges.append((0, hinge))
    return Graph.from_edges(hinge + 1, edges)


def _scallop(spec: ScallopSpec) -> Graph:
    if spec.k5:
        return complete_graph(5)
    n = spec.n
    if n < 3:
        raise ValueError("scallop cycle needs at least 3 vertices")
    u, v, w = n, n + 1, n + 2
    c1, cn = 0, n - 1
    edges = _cycle(n) + [(u, v), (u, c1), (u, cn), (v, c1), (v, cn), (w, u), (w, v)]
    edges += [(w, x) for x in range(1, n - 1)]
    if spec.wc1:
        edges.append((w, c1))
    if spec.wcn:
        edges.append((w, cn))
    return Graph.from_edges(n + 3, edges)


def _clam(spec: ClamSpec) -> Graph:
    n, j = spec.n, spec.j
    if not 2 <= j <= n - 1:
        raise ValueError("clam index j must lie in 2..n-1")
    u, v = n, n + 1
    un = [n - 1] + list(range(0, j))
    vn = list(range(j - 1, n)) + [0]
    return Graph.from_edges(
        n + 2, _cycle(n) + [(u, v)] + [(x, u) for x in un] + [(x, v) for x in vn]
    )


def _whelk(spec: WhelkSpec) -> Graph:
    n, i, j = spec.n, spec.i, spec.j
    if not 2 <= i < j <= n:
        raise ValueError("whelk indices need 2 <= i < j <= n")
    u, v = n, n + 1
    un = list(range(0, j))
    vn = sorted(set(range(j - 1, n)) | {i - 1})
    return Graph.from_edges(
        n + 2, _cycle(n) + [(u, v)] + [(x, u) for x in un] + [(x, v) for x in vn]
    )


_BUILDERS = {
    MobiusChainSpec: _chain,
    DoubleWheelSpec: _double_wheel,
    ConchSpec: _conch,
    MusselSpec: _mussel,
    ScallopSpec: _scallop,
    ClamSpec: _clam,
    WhelkSpec: _whelk,
}

# families whose definition demands 3-connectivity outright
_NEEDS_3CONN = (ConchSpec, MusselSpec, ScallopSpec, ClamSpec, WhelkSpec)


def generate(spec: FamilySpec) -> Graph:
    """The graph described by ``spec``; raises ValueError on bad parameters."""
    g = _BUILDERS[type(spec)](spec)
    if isinstance(spec, _NEEDS_3CONN) and connectivity_level(g) < 3:
        raise ValueError(f"{spec} is not 3-connected")
    return g


def mobius_ladder_spec(k: int) -> MobiusChainSpec:
    return MobiusChainSpec(2 * k, tuple((i, i + k) for i in range(k)))


# Vertex p_i of the drawings is vertex i - 1 here.
U8_EDGES = (
    (0, 6), (0, 4), (1, 5), (1, 7), (2, 4), (2, 5), (2, 6), (2, 7), (2, 3),
    (4, 5), (6, 7), (0, 3), (1, 3),
)
# b_i of the drawings is vertex i - 1.
W8_EDGES = (
    (0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (2, 5), (3, 6), (4, 7), (5, 7), (6, 7),
    (0, 5), (0, 6), (0, 4),
)


def generate_U8() -> Graph:
    return Graph.from_edges(8, U8_EDGES)


def generate_V8() -> Graph:
    return mobius_ladder(4)


def generate_W8() -> Graph:
    return Graph.from_edges(8, W8_EDGES)


# --- almost-planarity ----------------------------------------------------


def is_almost_planar(g: Graph) -> bool:
    if is_planar(g) or connectivity_level(g) < 3:
        return False
    return not has_F_cycle(g, critical_edges(g, "nonplanar"))


# --- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class FamilyCertificate:
    """``mapping[i]`` is the host vertex playing vertex ``i`` of ``generate(spec)``."""

    spec: FamilySpec
    mapping: tuple[int, ...]
    roles: dict[str, Any] = field(compare=False, default_factory=dict)

    @property
    def family(self) -> str:
        return self.spec.family

    def check(self, g: Graph) -> None:
        """Raise ValueError unless the host is exactly the certified graph."""
        model = generate(self.spec)
        if sorted(self.mapping) != list(g.vertices) or model.vertex_count != g.vertex_count:
            raise ValueError("mapping is not a bijection onto the host vertices")
        if model.relabel(list(self.mapping)).edges != g.edges:
            raise ValueError("host edges differ from the certified family member")
        if isinstance(self.spec, MobiusChainSpec) and is_planar(g):
            raise ValueError("a Mobius chain must be nonplanar")

    def to_json(self) -> dict[str, Any]:
        params = {k: v for k, v in self.spec.__dict__.items()}
        for k, v in params.items():
            if isinstance(v, tuple):
                params[k] = [list(x) if isinstance(x, tuple) else x for x in v]
        return {
            "family": self.family,
            "params": params,
            "mapping": list(self.mapping),
            "roles": self.roles,
        }


def _roles(spec: FamilySpec, m: tuple[int, ...]) -> dict[str, Any]:
    if isinstance(spec, MobiusChainSpec):
        return {"base_cycle": list(m), "chords": [sorted((m[a], m[b])) for a, b in spec.chords]}
    if isinstance(spec, DoubleWheelSpec):
        n = spec.n
        return {"base_cycle": list(m[:n]), "centres": [m[n], m[n + 1]]}
    if isinstance(spec, ConchSpec):
        p2, P, Q, R, p3 = _conch_layout(spec)
        return {"p1": m[0], "p2": m[p2], "p3": m[p3], "P": [m[x] for x in P],
                "Q": [m[x] for x in Q[::-1]], "R": [m[x] for x in R]}
    if isinstance(spec, MusselSpec):
        p2, paths, hinge = _mussel_layout(spec)
        fixed = [paths[0], paths[1][::-1], paths[2]]
        return {"tips": [m[0], m[p2]], "hinge": m[hinge],
                "paths": [[m[x] for x in path] for path in fixed]}
    if isinstance(spec, ScallopSpec):
        if spec.k5:
            return {"k5": list(m)}
        n = spec.n
        return {"base_cycle": list(m[:n]), "u": m[n], "v": m[n + 1], "w": m[n + 2]}
    n = spec.n
    out = {"base_cycle": list(m[:n]), "u": m[n], "v": m[n + 1], "j": spec.j}
    if isinstance(spec, WhelkSpec):
        out["i"] = spec.i
    return out


def _certify(g: Graph, spec: FamilySpec, mapping: list[int]) -> FamilyCertificate | None:
    try:
        model = generate(spec)
    except ValueError:
        return None
    if model.vertex_count != g.vertex_count or model.num_edges != g.num_edges:
        return None
    if model.relabel(mapping).edges != g.edges:
        return None
    m = tuple(mapping)
    return FamilyCertificate(spec, m, _roles(spec, m))


# --- recognizers -----------------------------------------------------------


def _check_cap(g: Graph) -> None:
    if g.vertex_count > RECOGNIZER_VERTEX_CAP:
        raise SizeCapError(
            f"graph has {g.vertex_count} vertices; role search is capped at {RECOGNIZER_VERTEX_CAP}"
        )


def _cycle_order(g: Graph, verts: list[int]) -> list[int] | None:
    """If ``verts`` induce exactly one cycle through all of them, its vertex order."""
    vs = set(verts)
    if len(vs) < 3:
        return None
    nb = {x: [y for y in g.adj[x] if y in vs] for x in verts}
    if any(len(a) != 2 for a in nb.values()):
        return None
    start = min(verts)
    order = [start, min(nb[start])]
    while len(order) < len(verts):
        a, b = nb[order[-1]]
        nxt = a if a != order[-2] else b
        if nxt == start:
            return None
        order.append(nxt)
    return order if start in nb[order[-1]] else None


def _labelings(order: list[int]) -> Iterator[list[int]]:
    n = len(order)
    for seq in (order, order[::-1]):
        for s in range(n):
            yield seq[s:] + seq[:s]


def _hamiltonian_cycles(g: Graph) -> Iterator[list[int]]:
    n = g.vertex_count
    if n < 3:
        return
    full = (1 << n) - 1
    stack = [(0, [0], 1)]
    while stack:
        x, path, used = stack.pop()
        if used == full:
            if 0 in g.adj[x] and path[1] < path[-1]:
                yield path
            continue
        for y in g.adj[x]:
            if not used >> y & 1:
                stack.append((y, path + [y], used | 1 << y))


def recognize_mobius_chain(g: Graph) -> FamilyCertificate | None:
    _check_cap(g)
    if g.vertex_count < 4 or is_planar(g):
        return None
    for order in _hamiltonian_cycles(g):
        pos = {x: i for i, x in enumerate(order)}
        n = len(order)
        cyc = {edge(order[i], order[(i + 1) % n]) for i in range(n)}
        chords = tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in g.edges - cyc))
        cert = _certify(g, MobiusChainSpec(n, chords), order)
        if cert is not None:
            return cert
    return None


def _centre_pairs(g: Graph) -> Iterator[tuple[int, int, list[int]]]:
    """Adjacent u, v whose removal leaves exactly a cycle, with its order."""
    for u, v in g.sorted_edges():
        rest = [x for x in g.vertices if x not in (u, v)]
        order = _cycle_order(g, rest)
        if order is not None:
            yield u, v, order


def recognize_double_wheel(g: Graph) -> FamilyCertificate | None:
    _check_cap(g)
    for u, v, order in _centre_pairs(g):
        n = len(order)
        pos = {x: i for i, x in enumerate(order)}
        spec = DoubleWheelSpec(
            n,
            tuple(sorted(pos[x] for x in g.adj[u] if x in pos)),
            tuple(sorted(pos[x] for x in g.adj[v] if x in pos)),
        )
        cert = _certify(g, spec, order + [u, v])
        if cert is not None:
            return cert
    return None


def recognize_clam(g: Graph) -> FamilyCertificate | None:
    _check_cap(g)
    for a, b, order in _centre_pairs(g):
        n = len(order)
        for u, v in ((a, b), (b, a)):
            for lab in _labelings(order):
                # c_n and c_1 are common neighbours of u and v
                if not {lab[0], lab[-1]} <= g.adj[u] & g.adj[v]:
                    continue
                for j in range(2, n):
                    cert = _certify(g, ClamSpec(n, j), lab + [u, v])
                    if cert is not None:
                        return cert
    return None


def recognize_whelk(g: Graph) -> FamilyCertificate | None:
    _check_cap(g)
    for a, b, order in _centre_pairs(g):
        n = len(order)
        for u, v in ((a, b), (b, a)):
            for lab in _labelings(order):
                j = 0
                while j < n and lab[j] in g.adj[u]:
                    j += 1
                for i in range(2, j):
                    if lab[i - 1] in g.adj[v]:
                        cert = _certify(g, WhelkSpec(n, i, j), lab + [u, v])
                        if cert is not None:
                            return cert
    return None


def recognize_scallop(g: Graph) -> FamilyCertificate | None:
    _check_cap(g)
    if g.vertex_count == 5 and g.num_edges == 10:
        return FamilyCertificate(ScallopSpec(k5=True), tuple(range(5)), {"k5": list(range(5))})
    for trio in itertools.combinations(g.vertices, 3):
        rest = [x for x in g.vertices if x not in trio]
        order = _cycle_order(g, rest)
        if order is None:
            continue
        n = len(order)
        for u, v, w in itertools.permutations(trio):
            for lab in _labelings(order):
                spec = ScallopSpec(n, lab[0] in g.adj[w], lab[-1] in g.adj[w])
                cert = _certify(g, spec, lab + [u, v, w])
                if cert is not None:
                    return cert
    return None


def _spider_legs(g: Graph, removed: tuple[int, ...]) -> tuple[int, list[list[int]]] | None:
    """If g minus ``removed`` is a subdivided claw, its centre and legs (centre first)."""
    keep = [x for x in g.vertices if x not in removed]
    ks = set(keep)
    nb = {x: [y for y in g.adj[x] if y in ks] for x in keep}
    centres = [x for x in keep if len(nb[x]) == 3]
    if len(centres) != 1 or any(len(nb[x]) > 3 or not nb[x] for x in keep):
        return None
    c = centres[0]
    legs = []
    seen = {c}
    for first in sorted(nb[c]):
        leg = [c, first]
        seen.add(first)
        while len(nb[leg[-1]]) == 2:
            (nxt,) = [y for y in nb[leg[-1]] if y != leg[-2]]
            if nxt in seen:
                return None
            seen.add(nxt)
            leg.append(nxt)
        legs.append(leg)
    if len(seen) != len(keep):
        return None
    return c, legs


def recognize_conch(g: Graph) -> FamilyCertificate | None:
    _check_cap(g)
    for p1, p3 in itertools.permutations(g.vertices, 2):
        spider = _spider_legs(g, (p1, p3))
        if spider is None:
            continue
        p2, legs = spider
        for ri in range(3):
            R = legs[ri]
            P, Q = [legs[x] for x in range(3) if x != ri]
            for P, Q in ((P, Q), (Q, P)):
                spec = ConchSpec(len(P), len(Q), len(R), p1 in g.adj[p2], p1 in g.adj[p3])
                # layout: p1, P interior (p1 -> p2), p2, Q interior (p2 -> p1), R interior, p3
                mapping = [p1] + P[:0:-1] + [p2] + Q[1:] + R[1:] + [p3]
                cert = _certify(g, spec, mapping)
                if cert is not None:
                    return cert
    return None


def recognize_mussel(g: Graph) -> FamilyCertificate | None:
    _check_cap(g)
    for hinge in g.vertices:
        keep = [x for x in g.vertices if x != hinge]
        ks = set(keep)
        nb = {x: [y for y in g.adj[x] if y in ks] for x in keep}
        tips = [x for x in keep if len(nb[x]) >= 3]
        if len(tips) != 2 or any(len(nb[x]) != 2 for x in keep if x not in tips):
            continue
        a, b = tips
        threads = []
        for first in nb[a]:
            if first == b:
                continue
            path = [a, first]
            while path[-1] not in tips:
                (nxt,) = [y for y in nb[path[-1]] if y != path[-2]]
                path.append(nxt)
            threads.append(path)
        if len(threads) != 3 or any(t[-1] != b for t in threads):
            continue
        for p1, p2 in ((a, b), (b, a)):
            oriented = [t if t[0] == p1 else t[::-1] for t in threads]
            for P, Q, R in itertools.permutations(oriented):
                spec = MusselSpec(
                    len(P) - 1, len(Q) - 1, len(R) - 1,
                    p1 in g.adj[p2], p2 in g.adj[hinge], p1 in g.adj[hinge],
                )
                mapping = P + Q[-2:0:-1] + R[1:-1] + [hinge]
                cert = _certify(g, spec, mapping)
                if cert is not None:
                    return cert
    return None


RECOGNIZERS = {
    "mobius-chain": recognize_mobius_chain,
    "double-wheel": recognize_double_wheel,
    "conch": recognize_conch,
    "mussel": recognize_mussel,
    "scallop": recognize_scallop,
    "clam": recognize_clam,
    "whelk": recognize_whelk,
}


def recognize(g: Graph, family: str) -> FamilyCertificate | None:
    try:
        return RECOGNIZERS[family](g)
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None


def classify_almost_planar(g: Graph, all_hits: bool = False):
    """First family certificate in priority order, or every hit with ``all_hits``.

    Raises ClassificationGap when nothing matches.
    """
    hits = []
    if g.vertex_count == 5 and g.num_edges == 10:
        hits.append(recognize_scallop(g))
        if not all_hits:
            return hits[0]
    for fam in FAMILIES:
        if hits and fam == "scallop" and hits[0].family == "scallop":
            continue
        cert = RECOGNIZERS[fam](g)
        if cert is not None:
            if not all_hits:
                return cert
            hits.append(cert)
    if not hits:
        raise ClassificationGap(f"no family matches graph with edges {g.sorted_edges()}")
    return hits


# --- parameter sweeps ------------------------------------------------------


def _dihedral_key(n: int, chords: list[tuple[int, int]]) -> tuple:
    best = None
    for r in range(n):
        for flip in (False, True):
            def f(x: int) -> int:
                return ((-x if flip else x) + r) % n
            key = tuple(sorted(tuple(sorted((f(a), f(b)))) for a, b in chords))
            if best is None or key < best:
                best = key
    return best


def enumerate_mobius_chains(n: int) -> list[MobiusChainSpec]:
    """All nonplanar chord sets on an n-cycle obeying the chain rules, one per
    dihedral symmetry class."""
    cand = [(a, b) for a, b in itertools.combinations(range(n), 2) if (b - a) % n not in (1, n - 1)]
    ok = {
        (x, y): bool(set(x) & set(y)) or _crosses(x, y, n)
        for x, y in itertools.combinations(cand, 2)
    }
    found: dict[tuple, MobiusChainSpec] = {}

    def extend(start: int, chosen: list[tuple[int, int]]) -> None:
        if chosen and {v for c in chosen for v in c} == set(range(n)):
            key = _dihedral_key(n, chosen)
            if key not in found and not has_F_cycle(Graph(n, frozenset(chosen)), chosen):
                spec = MobiusChainSpec(n, key)
                if not is_planar(_chain(spec)):
                    found[key] = spec
        for i in range(start, len(cand)):
            c = cand[i]
            if all(ok[(x, c)] for x in chosen):
                nxt = chosen + [c]
                if len(nxt) <= n - 1:  # a forest on n vertices
                    extend(i + 1, nxt)

    extend(0, [])
    return [found[k] for k in sorted(found)]


def _dw_key(n: int, un: tuple, vn: tuple) -> tuple:
    best = None
    for r in range(n):
        for flip in (False, True):
            f = [((-x if flip else x) + r) % n for x in range(n)]
            a = tuple(sorted(f[x] for x in un))
            b = tuple(sorted(f[x] for x in vn))
            key = min((a, b), (b, a))
            if best is None or key < best:
                best = key
    return best


def enumerate_double_wheels(n: int) -> list[DoubleWheelSpec]:
    """Every double wheel on an n-cycle, one per symmetry class."""
    found: dict[tuple, DoubleWheelSpec] = {}
    subsets = [s for k in range(1, n + 1) for s in itertools.combinations(range(n), k)]
    for un in subsets:
        for vn in subsets:
            if len(set(un) & set(vn)) > 1 or len(un) + len(vn) < n:
                continue
            key = _dw_key(n, un, vn)
            if key in found:
                continue
            spec = DoubleWheelSpec(n, *key)
            try:
                _double_wheel(spec)
            except ValueError:
                continue
            found[key] = spec
    return [found[k] for k in sorted(found)]


def sweep_specs(
    max_cycle: int = 12, max_path: int = 6, chain_max_n: int = 9, wheel_max_n: int = 7
) -> list[FamilySpec]:
    """The parameter sweep used for generator and recognizer round trips."""
    out: list[FamilySpec] = []
    out += [mobius_ladder_spec(k) for k in range(3, 7)]
    for n in range(6, chain_max_n + 1):
        out += [s for s in enumerate_mobius_chains(n) if s not in out]
    for n in range(4, wheel_max_n + 1):
        out += enumerate_double_wheels(n)
    lengths = range(3, max_path + 1)
    for p, q in itertools.combinations_with_replacement(lengths, 2):
        for r in lengths:
            for p1p2, p1p3 in itertools.product((False, True), repeat=2):
                out.append(ConchSpec(p, q, r, p1p2, p1p3))
    for p, q, r in itertools.combinations_with_replacement(lengths, 3):
        for flags in itertools.product((False, True), repeat=3):
            if sum(flags) <= 2:
                out.append(MusselSpec(p, q, r, *flags))
    out.append(ScallopSpec(k5=True))
    for n in range(3, max_cycle + 1):
        for wc1, wcn in itertools.product((False, True), repeat=2):
            out.append(ScallopSpec(n, wc1, wcn))
        out += [ClamSpec(n, j) for j in range(2, n)]
        out += [WhelkSpec(n, i, j) for j in range(3, n + 1) for i in range(2, j)]
    valid = []
    for s in out:
        try:
            generate(s)
        except ValueError:
            continue
        valid.append(s)
    return valid
