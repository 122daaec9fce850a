"""Exact coloring of (P5, bull)-free graphs via clique covers of (bull, house)-free graphs."""

from .detect import Pattern, Witness, find_induced, is_class_member
from .errors import ClassViolation, GraphInputError, InvariantViolation, SizeLimitError
from .graph import Graph, build_graph, complement, induced_subgraph
from .modules import quasi_maximal_modules
from .solver import (
    CliquePartition,
    ColorPartition,
    SolveTrace,
    chromatic_coloring,
    clique_cover,
    verify_coloring,
    verify_cover,
)

__all__ = [
    "ClassViolation",
    "CliquePartition",
    "ColorPartition",
    "Graph",
    "GraphInputError",
    "InvariantViolation",
    "Pattern",
    "SizeLimitError",
    "SolveTrace",
    "Witness",
    "build_graph",
    "chromatic_coloring",
    "clique_cover",
    "complement",
    "find_induced",
    "induced_subgraph",
    "is_class_member",
    "quasi_maximal_modules",
    "verify_coloring",
    "verify_cover",
]
