"""Brute-force ground truth for small graphs.

Nothing here calls into the solver, matching or module code; answers are
computed from definitions over plain Python bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .detect import Pattern
from .errors import SizeLimitError
from .graph import Graph, VertexSet

CHROMATIC_LIMIT = 16
MATCHING_LIMIT = 16
MODULES_LIMIT = 12


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for u in g.neighbors(v).tolist():
            m |= 1 << u
        out.append(m)
    return out


def _cap(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise SizeLimitError(f"{what} is capped at {limit} vertices, got {g.n}")


def _k_colorable(nbr: list[int], n: int, k: int) -> list[int] | None:
    """Exhaustive k-coloring search, most-constrained vertex first."""
    color = [-1] * n
    # colors already seen in each vertex's neighborhood, as a bitmask
    seen = [0] * n

    def pick():
        best, best_sat, best_deg = -1, -1, -1
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = bin(seen[v]).count("1")
            deg = bin(nbr[v]).count("1")
            if (sat, deg) > (best_sat, best_deg):
                best, best_sat, best_deg = v, sat, deg
        return best

    def rec(used: int) -> bool:
        v = pick()
        if v < 0:
            return True
        # a fresh color is tried only once: all unused colors are symmetric
        for c in range(min(used + 1, k)):
            if seen[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            for u in range(n):
                if nbr[v] >> u & 1 and not seen[u] >> c & 1:
                    seen[u] |= 1 << c
                    touched.append(u)
            if rec(max(used, c + 1)):
                return True
            for u in touched:
                seen[u] &= ~(1 << c)
            color[v] = -1
        return False

    return color if rec(0) else None


def brute_chromatic(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Chromatic number and a coloring with colors ``1..chi``."""
    _cap(g, CHROMATIC_LIMIT, "brute_chromatic")
    nbr = _masks(g)
    for k in range(g.n + 1):
        found = _k_colorable(nbr, g.n, k)
        if found is not None:
            return k, tuple(c + 1 for c in found)
    raise AssertionError("unreachable: n colors always suffice")


def brute_clique_cover(g: Graph) -> tuple[int, tuple[VertexSet, ...]]:
    """Minimum clique cover size and one optimal cover.

    Works on the complement: a coloring of the complement is a clique cover.
    """
    _cap(g, CHROMATIC_LIMIT, "brute_clique_cover")
    full = (1 << g.n) - 1
    nbr = [(~m & full) & ~(1 << v) for v, m in enumerate(_masks(g))]
    for k in range(g.n + 1):
        found = _k_colorable(nbr, g.n, k)
        if found is not None:
            parts = [tuple(v for v in range(g.n) if found[v] == c) for c in range(k)]
            return k, tuple(sorted(parts))
    raise AssertionError("unreachable")


def brute_matching(g: Graph) -> int:
    """Maximum matching size by exhaustive recursion on the lowest free vertex."""
    _cap(g, MATCHING_LIMIT, "brute_matching")
    nbr = _masks(g)

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if free == 0:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        out = best(rest)
        cands = nbr[v] & rest
        while cands:
            u = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best((1 << g.n) - 1)


@dataclass(frozen=True)
class HomogeneousSet:
    members: VertexSet
    strong: bool


def brute_all_modules(g: Graph) -> list[HomogeneousSet]:
    """Every non-empty homogeneous set, flagged strong when it overlaps no other."""
    _cap(g, MODULES_LIMIT, "brute_all_modules")
    n = g.n
    nbr = _masks(g)
    homog = []
    for s in range(1, 1 << n):
        ok = True
        for x in range(n):
            if s >> x & 1:
                continue
            hit = nbr[x] & s
            if hit and hit != s:
                ok = False
                break
        if ok:
            homog.append(s)
    out = []
    for s in homog:
        strong = all(t & s in (0, s, t) for t in homog)
        out.append(HomogeneousSet(tuple(v for v in range(n) if s >> v & 1), strong))
    return out


def maximal_proper_strong_modules(g: Graph) -> list[VertexSet]:
    """Inclusion-maximal strong modules other than V, sorted by smallest member."""
    strong = [set(h.members) for h in brute_all_modules(g) if h.strong and len(h.members) < g.n]
    maximal = [s for s in strong if not any(s < t for t in strong)]
    return sorted(tuple(sorted(s)) for s in maximal)


@lru_cache(maxsize=None)
def _labelled_copies(p: Pattern) -> frozenset[frozenset[tuple[int, int]]]:
    k = p.order
    out = set()
    for perm in permutations(range(k)):
        out.add(frozenset(tuple(sorted((perm[i], perm[j]))) for i, j in p.edges))
    return frozenset(out)


def brute_contains_induced(g: Graph, p: Pattern) -> bool:
    """Some vertex subset induces a graph isomorphic to ``p``."""
    k = p.order
    copies = _labelled_copies(p)
    nbr = _masks(g)
    for subset in combinations(range(g.n), k):
        edges = frozenset(
            (i, j) for i, j in combinations(range(k), 2) if nbr[subset[i]] >> subset[j] & 1
        )
        if edges in copies:
            return True
    return False
