"""Maximum-cardinality matching in general graphs (Edmonds' blossom method)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import GraphInputError
from .graph import Graph


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.edges)

    def mates(self, n: int) -> np.ndarray:
        mate = np.full(n, -1, dtype=np.int64)
        for u, v in self.edges:
            mate[u], mate[v] = v, u
        return mate


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``.

    Greedy initial matching in index order, then one augmenting-path search
    per still-free vertex, lowest index first. O(n^3) worst case.
    """
    mate = kernels.max_matching_mates(g.adjacency)
    pairs = tuple((u, int(mate[u])) for u in range(g.n) if mate[u] > u)
    return Matching(pairs)


def check_matching(g: Graph, m: Matching) -> None:
    seen = set()
    for u, v in m.edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
            raise GraphInputError(f"({u}, {v}) is not an edge of the graph")
        if u in seen or v in seen:
            raise GraphInputError(f"vertex of ({u}, {v}) is matched twice")
        seen.update((u, v))


def verify_maximum(g: Graph, m: Matching) -> bool:
    """No augmenting path starts at any unsaturated vertex."""
    check_matching(g, m)
    return not kernels.has_augmenting_path(g.adjacency, m.mates(g.n))
