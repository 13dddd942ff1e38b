"""Graph kernel: constructors, canonical form, embedding search."""

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from wordgraphs.graphs import (
    CORE_WIDTH,
    Graph,
    GraphError,
    are_isomorphic,
    canonical_form,
    canonical_key,
    clique,
    complement,
    complete_bipartite,
    cycle,
    embedding,
    embeds,
    empty_graph,
    enumerate_graphs,
    from_edges,
    induced_subgraph,
    line_graph,
    make,
    path,
)


def test_construction_rejects_asymmetry():
    with pytest.raises(GraphError):
        Graph(2, (2, 0))


def test_construction_rejects_loops():
    with pytest.raises(GraphError):
        Graph(1, (1,))


def test_construction_rejects_duplicate_labels():
    with pytest.raises(GraphError):
        Graph(2, (0, 0), labels=(5, 5))


def test_make_families():
    assert path(5).edge_count() == 4
    assert complete_bipartite(2, 3).edge_count() == 6
    assert clique(1).n == 1
    assert make("path", 5) == path(5)
    assert make("empty", 3).edge_count() == 0
    with pytest.raises(GraphError):
        make("hypercube", 3)


def test_induced_subgraph_examples():
    p4 = path(4)
    assert induced_subgraph(p4, [0, 1]) == from_edges(2, [(0, 1)])
    assert induced_subgraph(p4, []) == empty_graph(0)
    # C_4 on {0, 2}: opposite vertices are non-adjacent
    c4 = cycle(4)
    assert induced_subgraph(c4, [0, 2]) == empty_graph(2)
    with pytest.raises(GraphError):
        induced_subgraph(p4, [0, 7])


def test_induced_subgraph_restricts_labels():
    g = Graph(3, (2, 5, 2), labels=(-1, 0, 1))
    sub = induced_subgraph(g, [0, 2])
    assert sub.labels == (-1, 1)


def test_complement_examples():
    assert complement(clique(3)) == empty_graph(3)
    assert complement(empty_graph(0)) == empty_graph(0)
    # complement of P_4 is again a path on 4 vertices
    cp4 = complement(path(4))
    assert sorted(cp4.edges()) == [(0, 2), (0, 3), (1, 3)]
    assert are_isomorphic(cp4, path(4))


@given(graphs(max_n=8))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graphs(max_n=7), graphs(max_n=0))
def test_induced_commutes_with_complement(g, _):
    subset = [v for v in range(g.n) if v % 2 == 0]
    assert complement(induced_subgraph(g, subset)) == induced_subgraph(
        complement(g), subset)


def test_line_graph_examples():
    assert are_isomorphic(line_graph(path(4)), path(3))
    assert are_isomorphic(line_graph(clique(3)), clique(3))
    assert line_graph(empty_graph(5)) == empty_graph(0)


def test_canonical_key_examples():
    assert canonical_key(path(4)) == canonical_key(complement(path(4)))
    assert canonical_key(clique(3)) != canonical_key(path(3))
    rotated = from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 0), (0, 1)])
    assert canonical_key(cycle(5)) == canonical_key(rotated)


def test_canonical_key_overflow():
    with pytest.raises(GraphError):
        canonical_key(empty_graph(CORE_WIDTH + 1))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_key_matches_permutation_brute_force(g, h):
    same_key = g.n == h.n and canonical_key(g) == canonical_key(h)
    assert same_key == oracles.brute_isomorphic(g, h)


@given(graphs(max_n=7))
def test_canonical_form_is_isomorphic_relabelling(g):
    form = canonical_form(g)
    assert form.n == g.n
    assert form.degree_sequence() == g.degree_sequence()
    assert canonical_key(form) == canonical_key(g)


def test_embeds_examples():
    assert embeds(path(3), path(4))
    assert not embeds(clique(3), cycle(5))  # C_5 is triangle-free
    assert embeds(empty_graph(0), empty_graph(0))
    assert embeds(empty_graph(0), clique(4))


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=4), graphs(max_n=7))
def test_embeds_agrees_with_subset_enumeration(h, g):
    assert embeds(h, g) == oracles.brute_embeds(h, g)


@given(graphs(max_n=7))
def test_embeds_reflexive(g):
    assert embeds(g, g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=6))
def test_mutual_embedding_forces_equal_keys(h, g):
    if embeds(h, g) and embeds(g, h):
        assert canonical_key(h) == canonical_key(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=4), graphs(max_n=5), graphs(max_n=6))
def test_embeds_transitive(a, b, c):
    if embeds(a, b) and embeds(b, c):
        assert embeds(a, c)


def test_embedding_returns_validating_witness():
    h = complete_bipartite(1, 3)
    g = complete_bipartite(2, 4)
    image = embedding(h, g)
    assert image is not None
    assert are_isomorphic(induced_subgraph(g, image), h)


def test_enumerate_graphs_counts():
    levels = enumerate_graphs(6)
    assert [len(lv) for lv in levels] == [1, 1, 2, 4, 11, 34, 156]


def test_enumerate_graphs_matches_brute_classes():
    levels = enumerate_graphs(5)
    for n in range(6):
        got = {oracles.brute_canonical(g) for g in levels[n]}
        want = {oracles.brute_canonical(g) for g in oracles.brute_iso_classes(n)}
        assert got == want
