"""Homogeneous sets and the quasi-maximal module partition.

When a graph is disconnected its quasi-maximal modules are its components;
when its complement is disconnected they are the co-components. Otherwise
every proper homogeneous set sits inside one quasi-maximal module, so the
module of ``u`` is the union of all proper splitter closures of pairs
``{u, v}``. That last case is computed by a compiled kernel
(:func:`bullfree.kernels.maximal_module_labels`).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import GraphInputError, InvariantViolation
from .graph import Graph, VertexSet, co_components, connected_components


class PartitionKind(enum.Enum):
    COMPONENTS = "COMPONENTS"
    CO_COMPONENTS = "CO_COMPONENTS"
    MAXIMAL_PROPER = "MAXIMAL_PROPER"


@dataclass(frozen=True)
class ModulePartition:
    parts: tuple[VertexSet, ...]
    kind: PartitionKind

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def _members(g: Graph, s: Iterable[int]) -> np.ndarray:
    idx = np.unique(np.fromiter((int(x) for x in s), dtype=np.int64))
    if idx.size and (idx[0] < 0 or idx[-1] >= g.n):
        raise GraphInputError(f"vertex set has members outside 0..{g.n - 1}")
    return idx


def is_homogeneous(g: Graph, s: Iterable[int]) -> bool:
    """Every vertex outside ``s`` is complete or anticomplete to ``s``."""
    idx = _members(g, s)
    if idx.size == 0:
        raise GraphInputError("homogeneity is undefined for the empty set")
    inside = np.zeros(g.n, dtype=bool)
    inside[idx] = True
    hits = g.adjacency[:, idx].sum(axis=1)[~inside]
    return bool(np.all((hits == 0) | (hits == idx.size)))


def smallest_module_containing(g: Graph, seed: Iterable[int]) -> VertexSet:
    """Inclusion-minimal homogeneous set containing ``seed`` (may be all of V)."""
    idx = _members(g, seed)
    if idx.size < 2:
        raise GraphInputError("seed must hold at least two distinct vertices")
    closed = kernels.module_closure(g.bits, g.adjacency, idx)
    return tuple(np.flatnonzero(closed).tolist())


def quasi_maximal_modules(g: Graph) -> ModulePartition:
    if g.n < 2:
        raise GraphInputError("a graph needs two vertices to have a proper decomposition")
    comps = connected_components(g)
    if len(comps) > 1:
        return ModulePartition(tuple(comps), PartitionKind.COMPONENTS)
    cocomps = co_components(g)
    if len(cocomps) > 1:
        return ModulePartition(tuple(cocomps), PartitionKind.CO_COMPONENTS)

    labels = kernels.maximal_module_labels(g.bits, g.adjacency)
    if labels[0] < 0:
        u = int(-1 - labels[0])
        raise InvariantViolation(
            f"union of proper closures at vertex {u} overlaps an earlier part; "
            "quasi-maximal modules do not partition this graph"
        )
    parts = tuple(
        tuple(np.flatnonzero(labels == k).tolist()) for k in range(int(labels.max()) + 1)
    )
    for part in parts:
        if not is_homogeneous(g, part):
            raise InvariantViolation(f"computed module {part} is not homogeneous")
    return ModulePartition(parts, PartitionKind.MAXIMAL_PROPER)
