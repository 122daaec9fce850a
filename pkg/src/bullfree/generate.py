"""Reproducible (bull, house)-free instances.

Three recipes:

* ``REJECTION``: G(n, p) samples until one is (bull, house)-free.
* ``SUBSTITUTION``: start from a base graph of the library and keep
  substituting library graphs for vertices. With ``inner`` set, ``inner``
  is substituted for every vertex, ``depth`` times over; otherwise random
  vertices are replaced by random library graphs until ``n`` is reached.
* ``DUPLICATION_CHAIN``: duplicate random vertices of a base graph.

Both patterns are prime and free of twins, so substitution and duplication
keep the class. ``generate`` still runs the detector on every output.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

import numpy as np

from .detect import BULL_HOUSE, is_class_member
from .errors import GenerationError, GraphInputError
from .graph import Graph, build_graph


def _cycle(k):
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def _path(k):
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def _clique(k):
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


LIBRARY: dict[str, Graph] = {
    "K1": _clique(1),
    "K2": _clique(2),
    "K3": _clique(3),
    "S2": build_graph(2, []),
    "S3": build_graph(3, []),
    "P3": _path(3),
    "P4": _path(4),
    "P5": _path(5),
    "C5": _cycle(5),
    "C6": _cycle(6),
    "paw": build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    "diamond": build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
}

# prime members of the library, used as roots of random substitution trees
PRIMES = ("P4", "P5", "C5", "C6")


class Method(enum.Enum):
    REJECTION = "REJECTION"
    SUBSTITUTION = "SUBSTITUTION"
    DUPLICATION_CHAIN = "DUPLICATION_CHAIN"


@dataclass(frozen=True)
class GenRecipe:
    seed: int
    method: Method
    n: int | None = None
    p: float = 0.5
    base: str | None = None
    inner: str | None = None
    depth: int = 1
    length: int | None = None
    max_attempts: int = 10_000

    def to_dict(self) -> dict:
        d = asdict(self)
        d["method"] = self.method.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GenRecipe":
        d = dict(d)
        d["method"] = Method(str(d["method"]).upper())
        return cls(**d)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphInputError(f"vertex {v} outside 0..{g.n - 1}")


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add vertex ``g.n`` with exactly the neighbours of ``v``; it is not adjacent to ``v``."""
    _check_vertex(g, v)
    adj = np.zeros((g.n + 1, g.n + 1), dtype=bool)
    adj[: g.n, : g.n] = g.adjacency
    adj[g.n, : g.n] = g.adjacency[v]
    adj[: g.n, g.n] = g.adjacency[v]
    return Graph(adj)


def substitute(host: Graph, v: int, inner: Graph) -> Graph:
    """Replace ``v`` by a copy of ``inner``.

    Inner vertex 0 keeps index ``v``; inner vertices ``1..k-1`` are appended
    as ``host.n .. host.n+k-2``. Every copy vertex sees the host neighbours of
    ``v``, so the copy is a module of the result.
    """
    _check_vertex(host, v)
    k = inner.n
    if k == 0:
        raise GraphInputError("cannot substitute the empty graph")
    n = host.n + k - 1
    copy = [v] + list(range(host.n, n))
    rep = list(range(host.n)) + [v] * (k - 1)
    adj = host.adjacency[np.ix_(rep, rep)].copy()
    adj[np.ix_(copy, copy)] = inner.adjacency
    return Graph(adj)


def substitute_all(host: Graph, inner: Graph) -> Graph:
    g = host
    for v in range(host.n):
        g = substitute(g, v, inner)
    return g


def _library(name: str) -> Graph:
    try:
        return LIBRARY[name]
    except KeyError:
        raise GraphInputError(f"unknown library graph {name!r}; have {sorted(LIBRARY)}") from None


def _rejection(r: GenRecipe, rng) -> Graph:
    if r.n is None:
        raise GraphInputError("REJECTION needs n")
    for _ in range(r.max_attempts):
        upper = np.triu(rng.random((r.n, r.n)) < r.p, 1)
        g = Graph(upper | upper.T)
        if is_class_member(g, BULL_HOUSE)[0]:
            return g
    raise GenerationError(f"no (bull, house)-free G({r.n}, {r.p}) in {r.max_attempts} draws")


def _substitution(r: GenRecipe, rng) -> Graph:
    if r.inner is not None:
        g = _library(r.base or "C5")
        inner = _library(r.inner)
        for _ in range(r.depth):
            g = substitute_all(g, inner)
        return g
    if r.n is None:
        raise GraphInputError("SUBSTITUTION without inner needs n")
    g = _library(r.base) if r.base else LIBRARY[PRIMES[rng.integers(len(PRIMES))]]
    names = sorted(name for name in LIBRARY if LIBRARY[name].n >= 2)
    while g.n < r.n:
        room = r.n - g.n + 1
        fits = [name for name in names if LIBRARY[name].n <= room]
        inner = LIBRARY[fits[rng.integers(len(fits))]]
        g = substitute(g, int(rng.integers(g.n)), inner)
    return g


def _duplication(r: GenRecipe, rng) -> Graph:
    g = _library(r.base or "K1")
    length = r.length if r.length is not None else (r.n or g.n) - g.n
    for _ in range(max(0, length)):
        g = duplicate_vertex(g, int(rng.integers(g.n)))
    return g


def generate(recipe: GenRecipe) -> Graph:
    """Graph fully determined by ``recipe``, certified (bull, house)-free."""
    rng = np.random.default_rng(recipe.seed)
    build = {
        Method.REJECTION: _rejection,
        Method.SUBSTITUTION: _substitution,
        Method.DUPLICATION_CHAIN: _duplication,
    }[recipe.method]
    g = build(recipe, rng)
    ok, witness = is_class_member(g, BULL_HOUSE)
    if not ok:
        raise GenerationError(f"recipe {recipe} produced a graph containing {witness}")
    return g
