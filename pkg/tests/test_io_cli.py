import io
import json
import shutil
import subprocess
import sys

import pytest

from kdigraphs.cli import EXIT_NEGATIVE, EXIT_OK, EXIT_THEOREM, EXIT_USAGE, run
from kdigraphs.digraph import Digraph
from kdigraphs.enumeration import canonical_key, enumerate_digraphs, enumerate_graphs
from kdigraphs.families import generate_V8
from kdigraphs.graph import Graph, complete_bipartite, complete_graph
from kdigraphs.io import (
    FormatError,
    digraph_to_json,
    dump_json,
    format_digraph,
    format_graph,
    graph_to_json,
    parse_digraph,
    parse_graph,
    to_dot,
)
from kdigraphs.obstructions import make_strong_directed_K4
from kdigraphs.orientation import find_good_orientation

GAP_GRAPH = [(0, 2), (0, 3), (0, 4), (0, 6), (1, 2), (1, 3), (1, 5), (1, 6), (1, 7),
             (2, 4), (3, 5), (4, 5), (4, 7), (6, 7)]


def cli(argv, stdin=None, monkeypatch=None):
    chunks = []
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, chunks.append)
    return code, "".join(chunks)


@pytest.fixture
def write(tmp_path):
    def _write(text, name="in.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


# --- formats -------------------------------------------------------------------


def test_graph_round_trip():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert parse_graph(format_graph(g)) == g


def test_digraph_round_trip():
    for n in range(1, 5):
        for d in enumerate_digraphs(n):
            assert parse_digraph(format_digraph(d)) == d


def test_comments_and_blank_lines_are_ignored():
    text = "# K3\n\ngraph 3\n0 1\n  # middle\n1 2\n\n0 2\n"
    assert parse_graph(text) == complete_graph(3)


@pytest.mark.parametrize("text", [
    "",
    "graph\n",
    "digraph 3\n0 1\n",
    "graph x\n",
    "graph 3\n0 1 2\n",
    "graph 3\n0 3\n",
    "graph 3\n0 a\n",
    "graph 3\n1 1\n",
    "graph 3\n0 1\n1 0\n",
    "graph -1\n",
])
def test_bad_graph_text(text):
    with pytest.raises(FormatError):
        parse_graph(text)


@pytest.mark.parametrize("text", ["digraph 2\n0 1\n1 0\n", "digraph 2\n0 1\n0 1\n", "graph 2\n0 1\n"])
def test_bad_digraph_text(text):
    with pytest.raises(FormatError):
        parse_digraph(text)


def test_json_is_sorted_and_newline_terminated():
    doc = graph_to_json(complete_graph(3))
    text = dump_json(doc)
    assert text.endswith("\n") and json.loads(text) == doc
    assert text.index('"edges"') < text.index('"vertex_count"')
    assert digraph_to_json(make_strong_directed_K4())["vertex_count"] == 4


def test_dot_output():
    dot = to_dot(3, [(0, 1), (1, 2)], True, [(1, 2)])
    assert dot.startswith("digraph G {") and "1 -> 2 [style=bold" in dot
    assert "0 -- 1" in to_dot(2, [(0, 1)], False)


# --- commands ------------------------------------------------------------------


def test_ladder_pipes_into_classify(monkeypatch):
    code, text = cli(["generate", "mobius-ladder", "--k", "4"])
    assert code == EXIT_OK and parse_graph(text) == generate_V8()
    code, doc = cli(["classify", "-"], stdin=text, monkeypatch=monkeypatch)
    assert code == EXIT_OK and json.loads(doc)["family"] == "mobius-chain"


def test_series_parallel_witness_for_strong_k4(write):
    path = write(format_digraph(make_strong_directed_K4()))
    code, doc = cli(["obstruct", "--type", "series-parallel", path])
    assert code == EXIT_OK
    assert json.loads(doc)["kind"] == "strong-directed-K4"


def test_planar_obstruction_reports_the_core(write):
    d = find_good_orientation(complete_bipartite(3, 3)).digraph()
    code, doc = cli(["obstruct", "--type", "planar", write(format_digraph(d))])
    body = json.loads(doc)
    assert code == EXIT_OK and body["kind"] == "kuratowski-digraph"
    assert Digraph.from_arcs(6, [tuple(x) for x in body["core"]["arcs"]]) == d


def test_no_obstruction_prints_none(write):
    path = write("digraph 3\n0 1\n1 2\n2 0\n")
    code, text = cli(["obstruct", "--type", "outerplanar", "--format", "text", path])
    assert (code, text) == (EXIT_OK, "NONE\n")
    code, _ = cli(["obstruct", "--type", "outerplanar", "--expect", path])
    assert code == EXIT_NEGATIVE


def test_obstruct_dot(write):
    path = write(format_digraph(make_strong_directed_K4()))
    code, text = cli(["obstruct", "--type", "outerplanar", "--dot", path])
    assert code == EXIT_OK and "style=bold" in text


def test_verify_small(monkeypatch):
    code, doc = cli(["verify", "--theorem", "T1.3", "--max-n", "4"])
    assert code == EXIT_OK and json.loads(doc)["pass"] is True
    code, text = cli(["verify", "--theorem", "T1.3", "--max-n", "4", "--format", "text"])
    assert text.startswith("PASS T1.3")


def test_verify_jobs_are_byte_identical():
    _, one = cli(["verify", "--theorem", "T1.2", "--max-n", "5"])
    _, two = cli(["verify", "--theorem", "T1.2", "--max-n", "5", "--jobs", "2"])
    assert one == two


def test_almost_planar_text_and_json(write):
    path = write(format_graph(generate_V8()))
    code, text = cli(["almost-planar", path])
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "true" and lines[1:] == ["0 4", "1 5", "2 6", "3 7"]
    code, doc = cli(["almost-planar", "--format", "json", path])
    assert json.loads(doc) == {"almost_planar": True, "critical_edges": [[0, 4], [1, 5], [2, 6], [3, 7]]}
    code, _ = cli(["almost-planar", "--expect", write(format_graph(complete_graph(4)), "k4.txt")])
    assert code == EXIT_NEGATIVE


def test_orient_outputs(write):
    path = write(format_graph(complete_bipartite(3, 3)))
    code, text = cli(["orient", path])
    assert code == EXIT_OK
    d = parse_digraph(text)
    assert sorted(map(sorted, d.arcs)) == sorted(map(list, complete_bipartite(3, 3).edges))
    code, doc = cli(["orient", "--all", "--format", "json", path])
    body = json.loads(doc)
    assert body["count"] == len(body["orientations"]) >= 1
    code, text = cli(["orient", "--dot", path])
    assert text.startswith("digraph G {")


def test_orient_none_for_mixed_parity_mussel(write):
    _, text = cli(["generate", "mussel", "--p", "3", "--q", "3", "--r", "4", "--p1p3", "--p2p3"])
    path = write(text)
    assert cli(["orient", "--format", "text", path]) == (EXIT_OK, "NONE\n")
    assert cli(["orient", "--expect", path])[0] == EXIT_NEGATIVE


def test_orient_rejects_graphs_that_are_not_almost_planar(write):
    assert cli(["orient", write(format_graph(complete_graph(4)))])[0] == EXIT_USAGE


@pytest.mark.parametrize("argv,vertices", [
    (["generate", "mobius-chain", "--n", "6", "--chords", "0-3,1-4,2-5"], 6),
    (["generate", "double-wheel", "--n", "6", "--u-nbrs", "0,2,4", "--v-nbrs", "1,3,5"], 8),
    (["generate", "mussel", "--p", "3", "--q", "3", "--r", "3"], 9),
    (["generate", "conch", "--p", "3", "--q", "3", "--r", "3"], 9),
    (["generate", "scallop", "--k5"], 5),
    (["generate", "clam", "--n", "6", "--j", "3"], 8),
    (["generate", "whelk", "--n", "6", "--i", "2", "--j", "4"], 8),
    (["generate", "U8"], 8),
    (["generate", "W8"], 8),
])
def test_generate(argv, vertices):
    code, text = cli(argv)
    assert code == EXIT_OK
    assert parse_graph(text).vertex_count == vertices
    code, doc = cli(argv + ["--format", "json"])
    assert json.loads(doc)["vertex_count"] == vertices


def test_generate_rejects_bad_parameters():
    assert cli(["generate", "mobius-chain", "--n", "6", "--chords", "0-1"])[0] == EXIT_USAGE
    assert cli(["generate", "mobius-chain", "--n", "6", "--chords", "zero"])[0] == EXIT_USAGE


def test_classify_modes(write):
    path = write(format_graph(complete_graph(5)))
    code, doc = cli(["classify", "--all", path])
    body = json.loads(doc)
    assert body["almost_planar"] is True and body["certificates"]
    code, text = cli(["classify", "--format", "text", path])
    assert text.split()[0] in ("scallop", "mobius-chain")
    planar = write(format_graph(complete_graph(4)), "k4.txt")
    assert cli(["classify", planar]) == (EXIT_OK, "null\n")
    assert cli(["classify", "--expect", planar])[0] == EXIT_NEGATIVE


def test_classification_gap_is_a_theorem_violation(write):
    # an almost-planar graph outside every family; see the families tests
    code, _ = cli(["classify", write(format_graph(Graph.from_edges(8, GAP_GRAPH)))])
    assert code == EXIT_THEOREM


def test_minimal(monkeypatch):
    code, doc = cli(["minimal", "--property", "non-series-parallel", "--max-n", "4"])
    body = json.loads(doc)
    assert code == EXIT_OK and body["count"] == 1
    d = Digraph.from_arcs(4, [tuple(a) for a in body["digraphs"][0]["arcs"]])
    assert canonical_key(d) == canonical_key(make_strong_directed_K4())
    assert cli(["minimal", "--property", "nonplanar", "--max-n", "9"])[0] == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["classify"],
    ["classify", "--nope", "x"],
    ["obstruct", "x"],
    ["verify", "--theorem", "T9"],
    ["verify", "--theorem", "T1.2", "--max-n", "9"],
    ["verify", "--theorem", "T1.2", "--jobs", "0"],
    ["classify", "/nonexistent/file"],
])
def test_usage_errors(argv):
    assert cli(argv)[0] == EXIT_USAGE


def test_malformed_file_is_a_usage_error(write):
    assert cli(["classify", write("graph 2\n0 5\n")])[0] == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == EXIT_OK


def test_stdin_for_every_file_command(monkeypatch):
    k5 = format_graph(complete_graph(5))
    k4d = format_digraph(make_strong_directed_K4())
    for argv, text in [
        (["classify", "-"], k5),
        (["almost-planar", "-"], k5),
        (["orient", "-"], k5),
        (["obstruct", "--type", "series-parallel", "-"], k4d),
    ]:
        code, out = cli(argv, stdin=text, monkeypatch=monkeypatch)
        assert code == EXIT_OK and out


@pytest.mark.skipif(shutil.which("kdigraphs") is None, reason="console script not installed")
def test_console_script_pipe():
    gen = subprocess.run(["kdigraphs", "generate", "mobius-ladder", "--k", "3"],
                         capture_output=True, text=True, check=True)
    cls = subprocess.run(["kdigraphs", "classify", "-"], input=gen.stdout,
                         capture_output=True, text=True)
    assert cls.returncode == 0
    assert json.loads(cls.stdout)["family"] == "mobius-chain"
