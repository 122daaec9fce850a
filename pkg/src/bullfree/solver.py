"""Minimum clique cover of (bull, house)-free graphs, and its dual coloring.

Each recursion node is handled by the first applicable case:

I    no induced P5 and no induced C5: greedy coloring of the complement in
     non-increasing degree order; its color classes are the cliques.
II   triangle-free: maximum matching; matched pairs plus leftover singletons.
III  disconnected: cover each component.
IV   complement disconnected: cover each co-component and merge the j-th
     cliques of all co-components into one clique.
V    otherwise: cover every non-stable quasi-maximal module M, shrink M to a
     stable set with one vertex per clique of its cover, solve the reduced
     graph, then blow each stand-in vertex back up into its clique.

After V the reduced graph goes through the full case analysis again rather
than straight to I or II. On in-class input the extra cases never fire; on
anything else they turn a wrong answer into an error.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import chain
from typing import NamedTuple

import numpy as np

from .detect import BULL_HOUSE, C5_P5_HOUSE, P5_BULL, Pattern, find_induced, is_class_member
from .errors import ClassViolation, InvariantViolation
from .graph import (
    Graph,
    VertexSet,
    co_components,
    complement,
    connected_components,
    degree_sequence,
    induced_subgraph,
    is_stable_set,
)
from .matching import maximum_matching
from .modules import quasi_maximal_modules


@dataclass(frozen=True)
class CliquePartition:
    parts: tuple[VertexSet, ...]

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @classmethod
    def canonical(cls, parts) -> "CliquePartition":
        ordered = sorted(tuple(sorted(int(v) for v in p)) for p in parts)
        return cls(tuple(ordered))


@dataclass(frozen=True)
class ColorPartition:
    """``colors[v]`` is the color of vertex ``v``, in ``1..k``."""

    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def __len__(self):
        return self.k

    def classes(self) -> tuple[VertexSet, ...]:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return tuple(tuple(c) for c in out)

    @classmethod
    def from_classes(cls, n: int, classes) -> "ColorPartition":
        colors = [0] * n
        ordered = sorted(tuple(sorted(c)) for c in classes)
        for k, cls_ in enumerate(ordered, start=1):
            for v in cls_:
                colors[v] = k
        return cls(tuple(colors))


@dataclass
class TraceNode:
    step: str
    n: int
    modules: tuple[VertexSet, ...] | None = None
    children: list["TraceNode"] = field(default_factory=list)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def to_dict(self) -> dict:
        out = {"step": self.step, "n": self.n}
        if self.modules is not None:
            out["module_sizes"] = [len(m) for m in self.modules]
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out


@dataclass
class SolveTrace:
    root: TraceNode | None = None

    def nodes(self) -> list[TraceNode]:
        return [] if self.root is None else list(self.root.walk())

    def node_count(self) -> int:
        return len(self.nodes())

    def step_counts(self) -> dict[str, int]:
        counts = Counter(node.step for node in self.nodes())
        return {s: counts[s] for s in ("I", "II", "III", "IV", "V") if counts[s]}

    def depth(self) -> int:
        def d(node):
            return 1 + max((d(c) for c in node.children), default=0)

        return 0 if self.root is None else d(self.root)

    def summary(self) -> dict:
        return {"nodes": self.node_count(), "depth": self.depth(), "steps": self.step_counts()}


class Verdict(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


Solve = Callable[[Graph], CliquePartition]


# --------------------------------------------------------------------------
# coloring subroutines


def greedy_degree_coloring(g: Graph) -> ColorPartition:
    """First-fit coloring along :func:`degree_sequence` order."""
    colors = np.zeros(g.n, dtype=np.int64)
    adj = g.adjacency
    for v, _ in degree_sequence(g):
        used = np.zeros(g.n + 2, dtype=bool)
        used[colors[adj[v]]] = True
        colors[v] = int(np.argmin(used[1:])) + 1
    return ColorPartition(tuple(colors.tolist()))


def min_coloring_c5p5house_free(g: Graph, strict: bool = False) -> ColorPartition:
    """Optimal coloring of a (C5, P5, house)-free graph.

    With ``strict`` the class is checked first and a violation raises
    :class:`ClassViolation` carrying the witness.
    """
    if strict:
        ok, witness = is_class_member(g, C5_P5_HOUSE)
        if not ok:
            raise ClassViolation("graph is not (C5, P5, house)-free", witness)
    return greedy_degree_coloring(g)


# --------------------------------------------------------------------------
# the five cases


def cover_step_I(g: Graph, check: bool = True) -> CliquePartition:
    if check:
        for p in (Pattern.P5, Pattern.C5):
            w = find_induced(g, p)
            if w is not None:
                raise ClassViolation(f"case I needs a P5-free, C5-free graph; found {p.value}", w)
    coloring = greedy_degree_coloring(complement(g))
    return CliquePartition.canonical(coloring.classes())


def cover_step_II(g: Graph, check: bool = True) -> CliquePartition:
    if check:
        w = find_induced(g, Pattern.TRIANGLE)
        if w is not None:
            raise ClassViolation("case II needs a triangle-free graph", w)
    m = maximum_matching(g)
    matched = set(chain.from_iterable(m.edges))
    singles = [(v,) for v in range(g.n) if v not in matched]
    return CliquePartition.canonical(list(m.edges) + singles)


def _cover_of_part(g: Graph, part: VertexSet, solve: Solve) -> list[VertexSet]:
    sub, _ = induced_subgraph(g, part)
    return [tuple(part[i] for i in q) for q in solve(sub).parts]


def _step_III(g, solve, parts) -> CliquePartition:
    return CliquePartition.canonical(
        chain.from_iterable(_cover_of_part(g, comp, solve) for comp in parts)
    )


def _step_IV(g, solve, parts) -> CliquePartition:
    covers = [_cover_of_part(g, u, solve) for u in parts]
    c = max(len(cov) for cov in covers)
    merged = [
        [v for cov in covers if j < len(cov) for v in cov[j]] for j in range(c)
    ]
    return CliquePartition.canonical(merged)


def _step_V(g, solve, parts) -> CliquePartition:
    heavy = [m for m in parts if len(m) > 1 and not is_stable_set(g, m)]
    if not heavy:
        raise _no_reducible_module(g)

    module_covers = [_cover_of_part(g, m, solve) for m in heavy]

    in_heavy = np.zeros(g.n, dtype=bool)
    for m in heavy:
        in_heavy[list(m)] = True
    # stand-in vertex i of the reduced graph copies the adjacency of rep[i]
    rep = np.flatnonzero(~in_heavy).tolist()
    blow_up: list[VertexSet] = [(v,) for v in rep]
    for m, cover in zip(heavy, module_covers):
        rep.extend([m[0]] * len(cover))
        blow_up.extend(cover)
    if len(rep) >= g.n:
        raise InvariantViolation(f"module reduction did not shrink a {g.n}-vertex graph")
    reduced = Graph(g.adjacency[np.ix_(rep, rep)])

    outer = solve(reduced)
    return CliquePartition.canonical(
        [v for x in q for v in blow_up[x]] for q in outer.parts
    )


def _no_reducible_module(g: Graph) -> Exception:
    ok, witness = is_class_member(g, BULL_HOUSE)
    if not ok:
        return ClassViolation("graph is not (bull, house)-free", witness)
    return InvariantViolation(
        f"no case applies to a {g.n}-vertex (bull, house)-free graph: "
        "every quasi-maximal module is stable but the graph has a triangle and a P5 or C5"
    )


def cover_step_III(g: Graph, solve: Solve | None = None) -> CliquePartition:
    return _step_III(g, solve or _Recursion(), connected_components(g))


def cover_step_IV(g: Graph, solve: Solve | None = None) -> CliquePartition:
    return _step_IV(g, solve or _Recursion(), co_components(g))


def cover_step_V(g: Graph, solve: Solve | None = None) -> CliquePartition:
    return _step_V(g, solve or _Recursion(), quasi_maximal_modules(g).parts)


# --------------------------------------------------------------------------
# recursion


class _Recursion:
    """Callable recursion handle that records a trace node per call."""

    def __init__(self):
        self.trace = SolveTrace()
        self._stack: list[TraceNode] = []

    def __call__(self, g: Graph) -> CliquePartition:
        node = TraceNode(step="?", n=g.n)
        if self._stack:
            self._stack[-1].children.append(node)
        else:
            self.trace.root = node
        self._stack.append(node)
        try:
            return self._dispatch(g, node)
        finally:
            self._stack.pop()

    def _dispatch(self, g: Graph, node: TraceNode) -> CliquePartition:
        if find_induced(g, Pattern.C5) is None and find_induced(g, Pattern.P5) is None:
            node.step = "I"
            return cover_step_I(g, check=False)
        if find_induced(g, Pattern.TRIANGLE) is None:
            node.step = "II"
            return cover_step_II(g, check=False)
        comps = connected_components(g)
        if len(comps) > 1:
            node.step, node.modules = "III", tuple(comps)
            return _step_III(g, self, comps)
        cocomps = co_components(g)
        if len(cocomps) > 1:
            node.step, node.modules = "IV", tuple(cocomps)
            return _step_IV(g, self, cocomps)
        parts = quasi_maximal_modules(g).parts
        node.step, node.modules = "V", parts
        return _step_V(g, self, parts)


def clique_cover(g: Graph) -> tuple[CliquePartition, SolveTrace]:
    """Minimum clique cover of a (bull, house)-free graph.

    Raises :class:`ClassViolation` with a witness if ``g`` contains a bull
    or a house.
    """
    ok, witness = is_class_member(g, BULL_HOUSE)
    if not ok:
        raise ClassViolation("graph is not (bull, house)-free", witness)
    if g.n == 0:
        return CliquePartition(()), SolveTrace()
    rec = _Recursion()
    cover = rec(g)
    verdict = verify_cover(g, cover)
    if not verdict:
        raise InvariantViolation(f"solver produced an invalid cover: {verdict.reason}")
    return cover, rec.trace


def chromatic_coloring(g: Graph) -> tuple[ColorPartition, SolveTrace]:
    """Optimal coloring of a (P5, bull)-free graph, via a cover of its complement."""
    ok, witness = is_class_member(g, P5_BULL)
    if not ok:
        raise ClassViolation("graph is not (P5, bull)-free", witness)
    if g.n == 0:
        return ColorPartition(()), SolveTrace()
    rec = _Recursion()
    cover = rec(complement(g))
    coloring = ColorPartition.from_classes(g.n, cover.parts)
    verdict = verify_coloring(g, coloring)
    if not verdict:
        raise InvariantViolation(f"solver produced an invalid coloring: {verdict.reason}")
    return coloring, rec.trace


# --------------------------------------------------------------------------
# verifiers


def verify_cover(g: Graph, cp, base: int = 0) -> Verdict:
    """Check that ``cp`` partitions V into cliques.

    ``base`` only shifts vertex numbers in the failure message.
    """
    parts = cp.parts if isinstance(cp, CliquePartition) else tuple(cp)
    seen = np.zeros(g.n, dtype=bool)
    for part in parts:
        if len(part) == 0:
            return Verdict(False, "empty part")
        for v in part:
            if not 0 <= v < g.n:
                return Verdict(False, f"vertex {v + base} out of range")
            if seen[v]:
                return Verdict(False, f"vertex {v + base} covered twice")
            seen[v] = True
        for i, u in enumerate(part):
            for v in part[i + 1 :]:
                if not g.has_edge(u, v):
                    return Verdict(False, f"part is not a clique: {u + base} and {v + base} are non-adjacent")
    if not seen.all():
        return Verdict(False, f"vertex {int(np.argmin(seen)) + base} is not covered")
    return Verdict(True)


def verify_coloring(g: Graph, col, base: int = 0) -> Verdict:
    colors = col.colors if isinstance(col, ColorPartition) else tuple(col)
    if len(colors) != g.n:
        return Verdict(False, f"{len(colors)} colors given for {g.n} vertices")
    if any(c < 1 for c in colors):
        return Verdict(False, "colors must be positive")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return Verdict(False, f"edge ({u + base}, {v + base}) has both ends colored {colors[u]}")
    k = max(colors, default=0)
    missing = sorted(set(range(1, k + 1)) - set(colors))
    if missing:
        return Verdict(False, f"color class {missing[0]} is empty")
    return Verdict(True)
