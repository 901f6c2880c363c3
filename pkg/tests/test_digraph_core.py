import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from kdigraphs.digraph import (
    Digraph,
    delta,
    deletable_cycle_edge,
    is_strong,
    is_suppression_stable,
    paths_across_2cut,
    subdivide,
    suppress,
    underlying,
)
from kdigraphs.enumeration import canonical_key, enumerate_digraphs
from kdigraphs.graph import Graph, complete_graph, cycle_graph, simple_cycles
from kdigraphs.obstructions import (
    make_diwheel,
    make_reinforced_theta,
    make_strong_directed_K4,
    make_strong_theta,
)
from kdigraphs.topological import contains_directed_subdivision


def dicycle(n):
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        c = draw(st.integers(0, 2))
        if c == 1:
            arcs.append((u, v))
        elif c == 2:
            arcs.append((v, u))
    return Digraph.from_arcs(n, arcs)


def test_digraph_rejects_digons_and_loops():
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(1, 1)])


def test_is_strong_examples():
    assert is_strong(dicycle(3))
    assert not is_strong(Digraph.from_arcs(2, [(0, 1)]))
    assert is_strong(make_strong_directed_K4())
    assert is_strong(Digraph.from_arcs(1, []))


def test_underlying_examples():
    assert underlying(dicycle(3)) == cycle_graph(3)
    assert underlying(make_strong_directed_K4()) == complete_graph(4)
    assert underlying(Digraph.from_arcs(0, [])) == Graph.empty(0)


def test_suppress_examples():
    assert canonical_key(suppress(dicycle(5))) == canonical_key(dicycle(3))
    k4 = make_strong_directed_K4()
    assert suppress(k4) == k4
    assert suppress(dicycle(3)) == dicycle(3)


def test_subdivide_examples():
    assert canonical_key(subdivide(dicycle(3), (0, 1), 2)) == canonical_key(dicycle(4))
    d = make_strong_directed_K4()
    assert subdivide(d, (0, 1), 1) == d
    six = subdivide(d, (0, 1), 3)
    assert six.vertex_count == 6
    assert suppress(six) == d
    with pytest.raises(ValueError):
        subdivide(d, (1, 0), 2)


@settings(max_examples=200, deadline=None)
@given(digraphs())
def test_suppress_is_idempotent_and_stable(d):
    s = suppress(d)
    assert suppress(s) == s
    assert is_suppression_stable(s)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_subdivision_round_trip(seed):
    rng = random.Random(seed)
    base = rng.choice([make_strong_directed_K4(), make_diwheel(4), make_strong_theta(2, 2, 2)])
    d = base
    for _ in range(rng.randint(1, 3)):
        d = subdivide(d, rng.choice(d.sorted_arcs()), rng.randint(1, 3))
    w = contains_directed_subdivision(d, base)
    assert w is not None
    w.validate(d)


@settings(max_examples=200, deadline=None)
@given(digraphs())
def test_is_strong_by_double_search(d):
    fwd, bwd = {0}, {0}
    for seen, nxt in ((fwd, d.succ), (bwd, d.pred)):
        todo = [0]
        while todo:
            x = todo.pop()
            for y in nxt[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
    assert is_strong(d) == (len(fwd) == len(bwd) == d.vertex_count)


@pytest.mark.parametrize("seed", range(40))
def test_every_suppression_order_gives_a_stable_ancestor(seed):
    rng = random.Random(seed)
    base = rng.choice([make_strong_directed_K4(), make_diwheel(4), dicycle(3), make_reinforced_theta(2, 2, 2)])
    d = base
    while d.vertex_count < 8:
        d = subdivide(d, rng.choice(d.sorted_arcs()), 2)
    for s in range(6):
        core = suppress(d, random.Random(s))
        assert is_suppression_stable(core)
        w = contains_directed_subdivision(d, core)
        assert w is not None
        w.validate(d)


def test_suppression_is_not_confluent():
    # reinforced theta with its back arc and one forward path both subdivided:
    # whichever is suppressed first blocks the other
    d = Digraph.from_arcs(8, [(0, 2), (0, 3), (0, 6), (1, 7), (2, 1), (3, 1), (4, 5), (5, 1), (6, 4), (7, 0)])
    results = {canonical_key(suppress(d, random.Random(s))) for s in range(6)}
    assert len(results) == 2
    assert canonical_key(make_reinforced_theta(2, 2, 2)) in results


def test_directed_subdivision_examples():
    k4 = make_strong_directed_K4()
    w = contains_directed_subdivision(k4, k4)
    assert w is not None and w.branch_map is not None
    assert contains_directed_subdivision(dicycle(6), k4) is None
    assert contains_directed_subdivision(make_diwheel(8), make_diwheel(4)) is None


def test_deletable_cycle_edge_examples():
    cut = deletable_cycle_edge(dicycle(3), [0, 1, 2])
    assert len(cut.side_A) in (1, 2) and len(cut.out_arcs) == len(cut.in_arcs) == 1
    bowtie = Digraph.from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    cut = deletable_cycle_edge(bowtie, [0, 1, 2])
    assert len(cut.out_arcs) == len(cut.in_arcs) == 1
    w = make_diwheel(4)
    arc = deletable_cycle_edge(w, [0, 1, 2, 3])
    assert isinstance(arc, tuple) and is_strong(w.remove_arcs([arc]))


@pytest.mark.parametrize("n", range(3, 6))
def test_deletable_cycle_edge_total(n):
    for d in enumerate_digraphs(n, is_strong):
        for cyc in simple_cycles(underlying(d)):
            out = deletable_cycle_edge(d, cyc)
            if isinstance(out, tuple):
                assert is_strong(d.remove_arcs([out]))
            else:
                out.check(d)
                assert len(out.out_arcs) == len(out.in_arcs) == 1


def test_paths_across_2cut_examples():
    paths = paths_across_2cut(make_strong_theta(2, 2, 2), 0, 1)
    assert sorted(len(p) for p in paths) == [3, 3, 3]
    assert sorted((p[0], p[-1]) for p in paths) == [(0, 1), (0, 1), (1, 0)]
    paths = paths_across_2cut(make_reinforced_theta(2, 2, 2), 0, 1)
    assert len(paths) == 3 and all((p[0], p[-1]) == (0, 1) and len(p) == 3 for p in paths)
    paths = paths_across_2cut(dicycle(4), 0, 2)
    assert sorted((p[0], p[-1]) for p in paths) == [(0, 2), (2, 0)]


def test_delta_examples():
    c = delta(dicycle(3), [0])
    assert len(c.out_arcs) == len(c.in_arcs) == 1
    k4 = make_strong_directed_K4()
    for pair in ([0, 1], [0, 2], [0, 3]):
        c = delta(k4, pair)
        assert len(c.out_arcs) + len(c.in_arcs) == 4 and c.out_arcs and c.in_arcs
    c = delta(Digraph.from_arcs(2, []), [0])
    assert not c.out_arcs and not c.in_arcs
    with pytest.raises(ValueError):
        delta(dicycle(3), [])
