import pytest

from bullfree.detect import Pattern
from bullfree.errors import SizeLimitError
from bullfree.graph import build_graph, complement
from bullfree.oracle import (
    brute_all_modules,
    brute_chromatic,
    brute_clique_cover,
    brute_contains_induced,
    brute_matching,
)
from bullfree.solver import ColorPartition, verify_coloring, verify_cover
from named import BULL, C5, HOUSE, PETERSEN, clique, labelled_graphs, stable, union

STAR = build_graph(4, [(0, 1), (0, 2), (0, 3)])


def test_chromatic_examples():
    assert brute_chromatic(C5)[0] == 3
    assert brute_chromatic(clique(6))[0] == 6
    # regression value, fixed after the first run
    k, colors = brute_chromatic(PETERSEN)
    assert k == 3 and verify_coloring(PETERSEN, ColorPartition(colors))


def test_clique_cover_examples():
    assert brute_clique_cover(C5)[0] == 3
    assert brute_clique_cover(clique(4))[0] == 1
    k, parts = brute_clique_cover(stable(4))
    assert k == 4 and verify_cover(stable(4), parts)


def test_matching_examples():
    assert brute_matching(C5) == 2
    assert brute_matching(clique(4)) == 2
    assert brute_matching(STAR) == 1


def test_modules_examples():
    homog = brute_all_modules(C5)
    assert {h.members for h in homog} == {(0,), (1,), (2,), (3,), (4,), (0, 1, 2, 3, 4)}
    k2k1 = union(clique(2), clique(1))
    assert (0, 1) in {h.members for h in brute_all_modules(k2k1)}


def test_strong_flag():
    # in a stable set every subset is homogeneous; only singletons and V are strong
    strong = {h.members for h in brute_all_modules(stable(3)) if h.strong}
    assert strong == {(0,), (1,), (2,), (0, 1, 2)}


def test_contains_induced_examples():
    assert not brute_contains_induced(C5, Pattern.TRIANGLE)
    assert brute_contains_induced(BULL, Pattern.BULL)
    assert brute_contains_induced(HOUSE, Pattern.HOUSE)


def test_size_caps():
    with pytest.raises(SizeLimitError):
        brute_chromatic(stable(17))
    with pytest.raises(SizeLimitError):
        brute_all_modules(stable(13))
    with pytest.raises(SizeLimitError):
        brute_matching(stable(17))


@pytest.mark.parametrize("n", range(6))
def test_duality_self_check(n):
    for g in labelled_graphs(n):
        k, colors = brute_chromatic(g)
        assert verify_coloring(g, ColorPartition(colors))
        kc, parts = brute_clique_cover(complement(g))
        assert k == kc and verify_cover(complement(g), parts)
