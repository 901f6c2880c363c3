import functools
import random

import pytest

from kdigraphs.families import (
    FAMILIES,
    ClamSpec,
    ClassificationGap,
    ConchSpec,
    DoubleWheelSpec,
    MobiusChainSpec,
    MusselSpec,
    ScallopSpec,
    WhelkSpec,
    classify_almost_planar,
    enumerate_double_wheels,
    enumerate_mobius_chains,
    generate,
    generate_U8,
    generate_V8,
    generate_W8,
    is_almost_planar,
    mobius_ladder_spec,
    recognize,
    sweep_specs,
)
from kdigraphs.graph import Graph, complete_bipartite, complete_graph, connectivity_level, mobius_ladder
from kdigraphs.enumeration import canonical_key, enumerate_graphs
from kdigraphs.planarity import is_planar, kuratowski_subgraph
from kdigraphs.topological import contains_subdivision, iter_subdivisions, ladder_number


def shuffled(g, seed):
    perm = list(range(g.vertex_count))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


def test_generate_examples():
    assert canonical_key(generate(mobius_ladder_spec(2))) == canonical_key(complete_graph(4))
    assert canonical_key(generate(mobius_ladder_spec(4))) == canonical_key(generate_V8())
    m = generate(MusselSpec(3, 3, 3))
    hinge = m.vertex_count - 1
    assert m.vertex_count == 9 and m.degree(hinge) == 6


def test_generate_rejects_bad_chains():
    with pytest.raises(ValueError):
        generate(MobiusChainSpec(8, ((0, 2), (4, 6))))


def test_u8_w8_properties():
    for g in (generate_U8(), generate_W8()):
        assert g.vertex_count == 8
        assert not is_planar(g)
        assert is_almost_planar(g)
        assert ladder_number(g) == 3


def test_is_almost_planar_examples():
    assert is_almost_planar(complete_graph(5))
    assert is_almost_planar(complete_bipartite(3, 3))
    assert not is_almost_planar(complete_graph(6))


def test_recognize_examples():
    assert recognize(complete_graph(5), "scallop") is not None
    for n in range(4, 8):
        for j in range(2, n):
            try:
                g = generate(ClamSpec(n, j))
            except ValueError:
                continue
            assert recognize(g, "double-wheel") is None


def test_classify_examples():
    assert classify_almost_planar(generate_V8()).family == "mobius-chain"
    assert classify_almost_planar(complete_bipartite(3, 3)).family == "mobius-chain"
    assert classify_almost_planar(generate_U8()).family in {"double-wheel", "conch", "whelk", "mussel"}


@pytest.mark.parametrize("seed", range(25))
def test_recognizers_survive_relabelling(seed):
    specs = sweep_specs(max_cycle=8, max_path=4, chain_max_n=8, wheel_max_n=6)
    spec = random.Random(seed).choice(specs)
    g = shuffled(generate(spec), seed)
    cert = recognize(g, spec.family)
    assert cert is not None
    cert.check(g)
    assert cert.to_json()["family"] == spec.family


def test_certificate_check_rejects_wrong_host():
    g = generate_V8()
    cert = recognize(g, "mobius-chain")
    with pytest.raises(ValueError):
        cert.check(g.remove_edges([(0, 4)]))


def test_sweep_size():
    specs = sweep_specs()
    assert len(specs) >= 300
    assert {s.family for s in specs} == set(FAMILIES)


def test_enumeration_counts():
    assert [len(enumerate_mobius_chains(n)) for n in range(6, 10)] == [4, 10, 30, 66]
    assert [len(enumerate_double_wheels(n)) for n in range(4, 8)] == [2, 4, 11, 21]


def test_k5_is_the_only_ladder_two_almost_planar_graph():
    k5 = canonical_key(complete_graph(5))
    for n in range(5, 8):
        for g in enumerate_graphs(n):
            if connectivity_level(g) < 3 or is_planar(g) or ladder_number(g) != 2:
                continue
            assert is_almost_planar(g) == (canonical_key(g) == k5)


@functools.lru_cache(maxsize=None)
def _corpus_upto(max_n):
    return tuple(
        g
        for n in range(5, max_n + 1)
        for g in enumerate_graphs(n)
        if g.num_edges >= 9 and is_almost_planar(g)
    )


def _almost_planar_corpus(max_n):
    return iter(_corpus_upto(max_n))


# Almost-planar on 8 vertices, U8 inside, yet none of the seven shapes fits.
UNCLASSIFIED_8 = (
    [(0, 2), (0, 3), (0, 4), (0, 6), (1, 2), (1, 3), (1, 5), (1, 6), (1, 7),
     (2, 4), (3, 5), (4, 5), (4, 7), (6, 7)],
    [(0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (1, 2), (1, 3), (1, 4),
     (1, 7), (2, 4), (2, 5), (2, 6), (3, 5), (6, 7)],
)


def test_high_ladder_number_means_mobius_chain():
    corpus = list(_almost_planar_corpus(8)) + [mobius_ladder(k) for k in (4, 5, 6)]
    hits = 0
    for g in corpus:
        if (ladder_number(g) or 0) >= 4:
            hits += 1
            assert recognize(g, "mobius-chain") is not None
    assert hits > 0


def test_k33_witnesses_span_ladder_three_graphs():
    k33 = complete_bipartite(3, 3)
    for g in list(_almost_planar_corpus(7)) + [generate_U8(), generate_W8()]:
        if ladder_number(g) != 3:
            continue
        for i, w in enumerate(iter_subdivisions(g, k33)):
            assert w.host_vertices() == set(g.vertices)
            if i > 50:
                break


def test_no_classification_gap_up_to_eight_vertices():
    # The completeness claim, checked as stated. Known to fail on UNCLASSIFIED_8.
    gaps = []
    for g in _almost_planar_corpus(8):
        try:
            classify_almost_planar(g).check(g)
        except ClassificationGap:
            gaps.append(g.sorted_edges())
    assert not gaps, f"{len(gaps)} almost-planar graphs fit no family: {gaps}"


@pytest.mark.parametrize("edges", UNCLASSIFIED_8)
def test_unclassified_graphs_are_almost_planar_and_fit_no_family(edges):
    g = Graph.from_edges(8, edges)
    assert connectivity_level(g) == 3 and not is_planar(g)
    assert is_almost_planar(g)
    assert ladder_number(g) == 3
    assert contains_subdivision(g, generate_U8()) is not None
    assert all(recognize(g, fam) is None for fam in FAMILIES)
    with pytest.raises(ClassificationGap):
        classify_almost_planar(g)


def test_exactly_two_gaps_up_to_eight_vertices():
    gaps = set()
    for g in _almost_planar_corpus(8):
        try:
            classify_almost_planar(g)
        except ClassificationGap:
            gaps.add(canonical_key(g))
    assert gaps == {canonical_key(Graph.from_edges(8, e)) for e in UNCLASSIFIED_8}
