"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is kept twice: as a boolean matrix (for numpy-side work) and as
packed ``uint64`` bit rows (for the compiled kernels). Both are read-only.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .errors import GraphInputError

VertexSet = tuple[int, ...]


def pack_rows(mask: np.ndarray) -> np.ndarray:
    """Pack a boolean ``(rows, n)`` array into little-endian uint64 words."""
    mask = np.atleast_2d(np.asarray(mask, dtype=bool))
    rows, n = mask.shape
    words = max(1, (n + 63) // 64)
    packed = np.packbits(mask, axis=1, bitorder="little")
    out = np.zeros((rows, words * 8), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view("<u8").astype(np.uint64, copy=False)


def unpack_row(words: np.ndarray, n: int) -> np.ndarray:
    raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


class Graph:
    """Immutable simple graph.

    Build one with :func:`build_graph` or :meth:`Graph.from_adjacency`.
    """

    __slots__ = ("n", "_adj", "_bits", "__weakref__")

    def __init__(self, adj: np.ndarray):
        adj = np.array(adj, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphInputError("adjacency matrix must be square")
        if adj.diagonal().any():
            raise GraphInputError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise GraphInputError("adjacency matrix must be symmetric")
        adj.setflags(write=False)
        self.n = adj.shape[0]
        self._adj = adj
        self._bits = None

    @classmethod
    def from_adjacency(cls, adj) -> "Graph":
        return cls(adj)

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    @property
    def bits(self) -> np.ndarray:
        """Packed adjacency rows, shape ``(n, ceil(n/64))``."""
        if self._bits is None:
            bits = pack_rows(self._adj) if self.n else np.zeros((0, 1), np.uint64)
            bits.setflags(write=False)
            self._bits = bits
        return self._bits

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self._adj[v])

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    @property
    def m(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges; repeated pairs collapse."""
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return Graph(adj)


def _as_vertex_array(g: Graph, s: Iterable[int]) -> np.ndarray:
    arr = np.unique(np.fromiter((int(x) for x in s), dtype=np.int64))
    if arr.size and (arr[0] < 0 or arr[-1] >= g.n):
        raise GraphInputError(f"vertex set has members outside 0..{g.n - 1}")
    return arr


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G[s]`` relabelled by ascending old index, plus the old->new map."""
    idx = _as_vertex_array(g, s)
    sub = Graph(g.adjacency[np.ix_(idx, idx)])
    return sub, {int(old): new for new, old in enumerate(idx)}


def _components(adj: np.ndarray) -> list[VertexSet]:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        comp = np.zeros(n, dtype=bool)
        comp[start] = True
        frontier = comp.copy()
        while frontier.any():
            reach = adj[frontier].any(axis=0) & ~comp
            comp |= reach
            frontier = reach
        seen |= comp
        parts.append(tuple(np.flatnonzero(comp).tolist()))
    return parts


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the components, ordered by smallest member."""
    return _components(g.adjacency)


def co_components(g: Graph) -> list[VertexSet]:
    """Components of the complement, ordered by smallest member."""
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return _components(adj)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    idx = _as_vertex_array(g, s)
    sub = g.adjacency[np.ix_(idx, idx)]
    return int(sub.sum()) == idx.size * (idx.size - 1)


def is_stable_set(g: Graph, s: Iterable[int]) -> bool:
    idx = _as_vertex_array(g, s)
    return not g.adjacency[np.ix_(idx, idx)].any()


def degree_sequence(g: Graph) -> list[tuple[int, int]]:
    """``(vertex, degree)`` by non-increasing degree; ties by vertex index."""
    deg = g.degrees()
    order = np.lexsort((np.arange(g.n), -deg))
    return [(int(v), int(deg[v])) for v in order]
