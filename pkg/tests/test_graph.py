import numpy as np
import pytest
from hypothesis import given, settings

from bullfree.errors import GraphInputError
from bullfree.graph import (
    build_graph,
    co_components,
    complement,
    connected_components,
    degree_sequence,
    induced_subgraph,
    is_clique,
    is_stable_set,
    pack_rows,
)
from conftest import graphs
from named import BULL, C5, clique, cycle, labelled_graphs, multipartite, path, stable, union


def test_build_empty():
    g = build_graph(0, [])
    assert g.n == 0 and g.edges() == []


def test_build_c5_and_bull():
    assert C5.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert BULL.edges() == [(0, 1), (1, 2), (1, 4), (2, 3), (2, 4)]


def test_build_collapses_duplicates():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphInputError):
        build_graph(3, edges)


def test_adjacency_is_read_only():
    with pytest.raises(ValueError):
        C5.adjacency[0, 2] = True


def test_packed_rows_match_matrix():
    g = build_graph(130, [(0, 129), (64, 65), (3, 100)])
    bits = g.bits
    assert bits.shape == (130, 3)
    assert bits[0, 2] == np.uint64(1) << np.uint64(129 - 128)
    assert np.array_equal(pack_rows(g.adjacency), bits)


def test_complement_examples():
    assert complement(clique(3)) == stable(3)
    assert complement(C5) == build_graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    # the bull is self-complementary: path 2-0-3-1 with 4 on 0 and 3
    co = complement(BULL)
    assert co.edges() == [(0, 2), (0, 3), (0, 4), (1, 3), (3, 4)]
    relabel = [2, 0, 3, 1, 4]
    assert all(co.has_edge(relabel[u], relabel[v]) for u, v in BULL.edges())


def test_induced_subgraph():
    sub, mapping = induced_subgraph(C5, range(5))
    assert sub == C5 and mapping == {i: i for i in range(5)}
    sub, mapping = induced_subgraph(C5, {2, 0, 1})
    assert sub == path(3) and mapping == {0: 0, 1: 1, 2: 2}
    sub, _ = induced_subgraph(BULL, [0, 1, 2, 3])
    assert sub == path(4)
    with pytest.raises(GraphInputError):
        induced_subgraph(C5, [0, 7])


def test_components():
    k3k1 = build_graph(4, [(0, 1), (0, 2), (1, 2)])
    assert connected_components(k3k1) == [(0, 1, 2), (3,)]
    assert connected_components(C5) == [(0, 1, 2, 3, 4)]
    assert connected_components(stable(3)) == [(0,), (1,), (2,)]


def test_co_components():
    assert co_components(multipartite(3, 3)) == [(0, 1, 2), (3, 4, 5)]
    assert co_components(C5) == [(0, 1, 2, 3, 4)]
    assert co_components(clique(4)) == [(0,), (1,), (2,), (3,)]


def test_clique_and_stable():
    assert is_clique(C5, {0, 1})
    assert is_stable_set(C5, {0, 2})
    assert not is_clique(C5, {0, 1, 2})
    assert is_clique(C5, []) and is_stable_set(C5, []) and is_clique(C5, [3])


def test_degree_sequence():
    assert degree_sequence(BULL) == [(1, 3), (2, 3), (4, 2), (0, 1), (3, 1)]
    assert degree_sequence(clique(4)) == [(0, 3), (1, 3), (2, 3), (3, 3)]
    assert degree_sequence(stable(2)) == [(0, 0), (1, 0)]


def test_double_complement_exhaustive():
    for n in range(6):
        for g in labelled_graphs(n):
            assert complement(complement(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_components_partition(g):
    parts = connected_components(g)
    flat = sorted(v for p in parts for v in p)
    assert flat == list(range(g.n))
    label = {v: i for i, p in enumerate(parts) for v in p}
    for u, v in g.edges():
        assert label[u] == label[v]
    for p in parts:
        sub, _ = induced_subgraph(g, p)
        assert len(connected_components(sub)) == 1


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_clique_stable_duality(g):
    rng = np.random.default_rng(g.n)
    h = complement(g)
    for _ in range(10):
        size = int(rng.integers(0, min(4, g.n) + 1))
        s = rng.choice(g.n, size=size, replace=False) if g.n else []
        assert is_clique(g, s) == is_stable_set(h, s)
