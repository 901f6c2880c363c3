"""Certificates that a host contains a (directed) subdivision of a pattern."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from .graph import Edge, Graph, edge


@dataclass(frozen=True, eq=False)
class SubdivisionWitness:
    """Pattern vertex ``i`` sits at host vertex ``branch_map[i]``; each pattern
    edge ``(a, b)`` with ``a < b`` is realised by ``paths[(a, b)]``, a host
    vertex sequence running from ``branch_map[a]`` to ``branch_map[b]``."""

    pattern: Graph
    branch_map: tuple[int, ...]
    paths: Mapping[Edge, tuple[int, ...]]

    def _pattern_edges(self) -> list[Edge]:
        return self.pattern.sorted_edges()

    def _host_has(self, host: Any, u: int, v: int) -> bool:
        return host.has_edge(u, v)

    def validate(self, host: Any) -> None:
        """Raise ValueError unless this is a genuine subdivision inside ``host``."""
        bmap = self.branch_map
        if len(bmap) != self.pattern.vertex_count or len(set(bmap)) != len(bmap):
            raise ValueError("branch map is not an injection of the pattern vertices")
        if any(not 0 <= x < host.vertex_count for x in bmap):
            raise ValueError("branch vertex outside the host")
        if set(self.paths) != set(self._pattern_edges()):
            raise ValueError("paths do not cover exactly the pattern edges")
        branch = set(bmap)
        interior: set[int] = set()
        for a, b in self._pattern_edges():
            p = self.paths[(a, b)]
            if len(p) < 2:
                raise ValueError(f"path for {(a, b)} has length zero")
            if p[0] != bmap[a] or p[-1] != bmap[b]:
                raise ValueError(f"path for {(a, b)} has the wrong ends")
            for x, y in zip(p, p[1:]):
                if not self._host_has(host, x, y):
                    raise ValueError(f"path for {(a, b)} uses a non-edge {(x, y)}")
            inner = p[1:-1]
            if len(set(inner)) != len(inner) or branch & set(inner) or interior & set(inner):
                raise ValueError(f"path for {(a, b)} is not internally disjoint")
            interior.update(inner)

    def is_valid(self, host: Any) -> bool:
        try:
            self.validate(host)
        except ValueError:
            return False
        return True

    def host_edges(self) -> frozenset[Edge]:
        return frozenset(edge(x, y) for p in self.paths.values() for x, y in zip(p, p[1:]))

    def host_vertices(self) -> frozenset[int]:
        return frozenset(x for p in self.paths.values() for x in p) | frozenset(self.branch_map)

    def to_json(self) -> dict[str, Any]:
        return {
            "pattern": {
                "vertex_count": self.pattern.vertex_count,
                "edges": [list(e) for e in self._pattern_edges()],
            },
            "branch_map": list(self.branch_map),
            "paths": [
                {"edge": [a, b], "path": list(self.paths[(a, b)])} for a, b in self._pattern_edges()
            ],
        }


@dataclass(frozen=True, eq=False)
class DirectedSubdivisionWitness(SubdivisionWitness):
    """As :class:`SubdivisionWitness`, with a digraph pattern and directed paths."""

    pattern: Any  # Digraph

    def _pattern_edges(self) -> list[Edge]:
        return sorted(self.pattern.arcs)

    def _host_has(self, host: Any, u: int, v: int) -> bool:
        return host.has_arc(u, v)

    def host_arcs(self) -> frozenset[Edge]:
        return frozenset((x, y) for p in self.paths.values() for x, y in zip(p, p[1:]))

    def to_json(self) -> dict[str, Any]:
        doc = super().to_json()
        doc["pattern"] = {
            "vertex_count": self.pattern.vertex_count,
            "arcs": [list(a) for a in self._pattern_edges()],
        }
        for item in doc["paths"]:
            item["arc"] = item.pop("edge")
        return doc
