"""Text and JSON formats.

Graphs: a ``graph <n>`` header, then one ``u v`` line per edge.  Digraphs:
``digraph <n>``, then ``u v`` per arc u -> v.  Vertices are 0-based.  Blank
lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .digraph import Digraph
from .graph import Graph


class FormatError(ValueError):
    pass


def _parse(text: str, kind: str) -> tuple[int, list[tuple[int, int]]]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != kind:
        raise FormatError(f"expected header '{kind} <n>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise FormatError(f"bad vertex count {head[1]!r}") from None
    if n < 0:
        raise FormatError("vertex count must be nonnegative")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer vertex in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in {ln!r}")
        pairs.append((u, v))
    return n, pairs


def parse_graph(text: str) -> Graph:
    n, pairs = _parse(text, "graph")
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_digraph(text: str) -> Digraph:
    n, pairs = _parse(text, "digraph")
    if len(set(pairs)) != len(pairs):
        raise FormatError("duplicate arc")
    try:
        return Digraph.from_arcs(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    return "".join([f"graph {g.vertex_count}\n"] + [f"{u} {v}\n" for u, v in g.sorted_edges()])


def format_digraph(d: Digraph) -> str:
    return "".join([f"digraph {d.vertex_count}\n"] + [f"{u} {v}\n" for u, v in d.sorted_arcs()])


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.sorted_edges()]}


def digraph_to_json(d: Digraph) -> dict[str, Any]:
    return {"vertex_count": d.vertex_count, "arcs": [list(a) for a in d.sorted_arcs()]}


def dump_json(doc: Any) -> str:
    """Key-sorted, newline-terminated JSON."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def to_dot(n: int, pairs: Iterable[tuple[int, int]], directed: bool,
           highlight: Iterable[tuple[int, int]] = ()) -> str:
    """DOT text; ``highlight`` pairs are drawn bold."""
    bold = set(highlight)
    sep = "->" if directed else "--"
    lines = ["digraph G {" if directed else "graph G {"]
    lines += [f"  {v};" for v in range(n)]
    for u, v in sorted(pairs):
        style = " [style=bold, color=red]" if (u, v) in bold else ""
        lines.append(f"  {u} {sep} {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
