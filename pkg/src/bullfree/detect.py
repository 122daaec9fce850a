"""Induced copies of P5, C5, the bull, the house and the triangle.

Detection enumerates role-ordered vertex tuples in lexicographic order, so
the first hit is the least tuple and results are reproducible. For the four
five-vertex patterns, which are prime (no twins, no non-trivial homogeneous
set), an induced copy uses at most one vertex from each twin class; the
search therefore only visits the smallest member of every class. This does
not change which tuple is found.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .errors import InvariantViolation
from .graph import Graph, complement


class Pattern(enum.Enum):
    P5 = "P5"
    C5 = "C5"
    BULL = "BULL"
    HOUSE = "HOUSE"
    TRIANGLE = "TRIANGLE"

    @property
    def order(self) -> int:
        return 3 if self is Pattern.TRIANGLE else 5

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges between role positions, as ``(i, j)`` with ``i < j``."""
        return PATTERN_EDGES[self]


_P5 = frozenset({(0, 1), (1, 2), (2, 3), (3, 4)})

PATTERN_EDGES = {
    Pattern.P5: _P5,
    Pattern.C5: _P5 | {(0, 4)},
    # roles a, b, c, d, e: path a-b-c-d plus e on b and c
    Pattern.BULL: frozenset({(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)}),
    # complement of P5 in the same role order
    Pattern.HOUSE: frozenset(combinations(range(5), 2)) - _P5,
    Pattern.TRIANGLE: frozenset({(0, 1), (0, 2), (1, 2)}),
}


@dataclass(frozen=True)
class Witness:
    pattern: Pattern
    vertices: tuple[int, ...]

    def to_dict(self, one_based: bool = False) -> dict:
        shift = 1 if one_based else 0
        return {"pattern": self.pattern.value, "vertices": [v + shift for v in self.vertices]}


def verify_witness(g: Graph, w: Witness) -> bool:
    """True iff ``w.vertices`` induce exactly the pattern's edges in role order."""
    vs = w.vertices
    if len(vs) != w.pattern.order or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    want = w.pattern.edges
    return all(
        g.has_edge(vs[i], vs[j]) == ((i, j) in want)
        for i, j in combinations(range(len(vs)), 2)
    )


def _relation(p: Pattern) -> np.ndarray:
    k = p.order
    rel = np.zeros((k, k), dtype=np.int8)
    for i, j in p.edges:
        rel[i, j] = rel[j, i] = 1
    return rel


def twin_representatives(g: Graph) -> np.ndarray:
    """Mask of vertices that are the smallest in their true- and false-twin class."""
    keep = np.ones(g.n, dtype=bool)
    if g.n < 2:
        return keep
    open_rows = np.packbits(g.adjacency, axis=1)
    closed = g.adjacency.copy()
    np.fill_diagonal(closed, True)
    closed_rows = np.packbits(closed, axis=1)
    for rows in (open_rows, closed_rows):
        _, first = np.unique(rows, axis=0, return_index=True)
        is_first = np.zeros(g.n, dtype=bool)
        is_first[first] = True
        keep &= is_first
    return keep


def find_induced(g: Graph, p: Pattern) -> Witness | None:
    """Lexicographically least role-ordered induced copy of ``p``, if any.

    A house of ``g`` is looked up as a P5 of the complement, so its witness
    lists the vertices in the order of that path.
    """
    if p is Pattern.HOUSE:
        hit = find_induced(complement(g), Pattern.P5)
        return None if hit is None else _checked(g, Witness(Pattern.HOUSE, hit.vertices))
    if g.n < p.order:
        return None
    if p is Pattern.TRIANGLE:
        keep = np.ones(g.n, dtype=bool)
    else:
        keep = twin_representatives(g)
    found = kernels.search_pattern(g.bits, g.adjacency, keep, _relation(p))
    if found is None:
        return None
    return _checked(g, Witness(p, tuple(found)))


def _checked(g: Graph, w: Witness) -> Witness:
    if not verify_witness(g, w):
        raise InvariantViolation(f"detector produced an invalid witness {w}")
    return w


def is_class_member(g: Graph, forbidden) -> tuple[bool, Witness | None]:
    """``(True, None)`` if no pattern in ``forbidden`` occurs, else the first hit."""
    for p in forbidden:
        w = find_induced(g, p)
        if w is not None:
            return False, w
    return True, None


BULL_HOUSE = (Pattern.BULL, Pattern.HOUSE)
P5_BULL = (Pattern.P5, Pattern.BULL)
C5_P5_HOUSE = (Pattern.C5, Pattern.P5, Pattern.HOUSE)
