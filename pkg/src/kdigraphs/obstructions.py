"""Strong obstructions to outerplanarity and to being series-parallel."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from .digraph import Digraph, underlying
from .graph import has_k4_subdivision
from .topological import iter_directed_subdivisions
from .witness import DirectedSubdivisionWitness


@dataclass(frozen=True, eq=False)
class ObstructionWitness:
    """``kind`` is one of ``strong-theta``, ``reinforced-theta``,
    ``strong-directed-K4``, ``diwheel(2k)`` or ``kuratowski-digraph``."""

    kind: str
    witness: DirectedSubdivisionWitness

    def validate(self, host: Digraph) -> None:
        self.witness.validate(host)

    def to_json(self) -> dict[str, Any]:
        doc = self.witness.to_json()
        doc["kind"] = self.kind
        return doc


def _chain(start: int, end: int, length: int, fresh: Iterator[int]) -> list[tuple[int, int]]:
    verts = [start] + [next(fresh) for _ in range(length - 1)] + [end]
    return list(zip(verts, verts[1:]))


def _theta(lengths: tuple[int, int, int], backward: int, reinforced: bool) -> Digraph:
    if len(lengths) != 3 or any(l < 2 for l in lengths):
        raise ValueError("theta path lengths must all be at least 2")
    n = 2 + sum(l - 1 for l in lengths)
    fresh = iter(range(2, n))
    arcs = []
    for i, l in enumerate(lengths):
        if i < 3 - backward:
            arcs += _chain(0, 1, l, fresh)
        else:
            arcs += _chain(1, 0, l, fresh)
    if reinforced:
        arcs.append((1, 0))
    return Digraph.from_arcs(n, arcs)


def make_strong_theta(l1: int, l2: int, l3: int) -> Digraph:
    """Hubs 0 and 1; paths of lengths l1, l2 from 0 to 1 and of length l3 back."""
    return _theta((l1, l2, l3), 1, False)


def make_reinforced_theta(l1: int, l2: int, l3: int) -> Digraph:
    """Three paths from hub 0 to hub 1, plus the single arc 1 -> 0 (the last arc)."""
    return _theta((l1, l2, l3), 0, True)


def make_strong_directed_K4() -> Digraph:
    return Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


def make_diwheel(two_k: int) -> Digraph:
    """Rim ``0 .. 2k-1``, hub ``2k``.  Even rim vertices are rim sources; the
    hub sends to them and receives from the odd ones."""
    if two_k < 4 or two_k % 2:
        raise ValueError("a diwheel needs an even rim length of at least 4")
    hub = two_k
    arcs = []
    for i in range(0, two_k, 2):
        arcs += [(i, i + 1), (i, (i - 1) % two_k), (hub, i), (i + 1, hub)]
    return Digraph.from_arcs(two_k + 1, arcs)


def _patterns(d: Digraph, thetas: bool, rim_only: bool):
    if thetas:
        yield "strong-theta", make_strong_theta(2, 2, 2), frozenset()
        yield "reinforced-theta", make_reinforced_theta(2, 2, 2), frozenset({(1, 0)})
    yield "strong-directed-K4", make_strong_directed_K4(), frozenset()
    for two_k in range(4, d.vertex_count, 2):
        w = make_diwheel(two_k)
        rigid = frozenset(a for a in w.arcs if two_k in a) if rim_only else frozenset()
        yield f"diwheel({two_k})", w, rigid


def _detect(d: Digraph, thetas: bool, rim_only: bool) -> ObstructionWitness | None:
    for kind, pattern, rigid in _patterns(d, thetas, rim_only):
        for w in iter_directed_subdivisions(d, pattern, rigid):
            return ObstructionWitness(kind, w)
    return None


def detect_outerplanar_obstruction(d: Digraph, rim_only: bool = False) -> ObstructionWitness | None:
    """A strong theta, reinforced theta, or directed subdivision of the strong
    directed K4 or of a diwheel inside ``d``.

    With ``rim_only`` the diwheel spokes must stay unsubdivided.
    """
    return _detect(d, True, rim_only)


def detect_series_parallel_obstruction(
    d: Digraph, rim_only: bool = False
) -> ObstructionWitness | None:
    """A directed subdivision of the strong directed K4 or of a diwheel inside ``d``."""
    return _detect(d, False, rim_only)


def is_series_parallel_digraph(d: Digraph) -> bool:
    return not has_k4_subdivision(underlying(d))
