"""DIMACS ``.col`` edge format.

Grammar: ``c`` comment lines, exactly one ``p edge <n> <m>`` line, then
``e <u> <v>`` lines with 1-based endpoints. Blank lines are ignored.
Repeated edges collapse; a declared ``m`` that disagrees with the number of
distinct edges is reported as a warning, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphInputError
from .graph import Graph, build_graph


@dataclass
class ParsedDimacs:
    graph: Graph
    declared_edges: int
    comments: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_dimacs(text: str) -> ParsedDimacs:
    n = declared = None
    edges = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks:
            continue
        kind = toks[0]
        if kind == "c":
            comments.append(raw[1:].strip())
        elif kind == "p":
            if n is not None:
                raise GraphInputError(f"line {lineno}: second problem line")
            if len(toks) != 4 or toks[1] != "edge":
                raise GraphInputError(f"line {lineno}: expected 'p edge <n> <m>'")
            n, declared = _int(toks[2], lineno), _int(toks[3], lineno)
            if n < 0 or declared < 0:
                raise GraphInputError(f"line {lineno}: negative count")
        elif kind == "e":
            if n is None:
                raise GraphInputError(f"line {lineno}: edge before problem line")
            if len(toks) != 3:
                raise GraphInputError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphInputError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise GraphInputError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphInputError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise GraphInputError("missing 'p edge' problem line")
    g = build_graph(n, edges)
    warnings = []
    if g.m != declared:
        warnings.append(f"problem line declares {declared} edges, found {g.m} distinct")
    return ParsedDimacs(g, declared, comments, warnings)


def read_dimacs(text: str) -> Graph:
    return parse_dimacs(text).graph


def write_dimacs(g: Graph, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
