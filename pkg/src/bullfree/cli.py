"""Command-line interface.

Exit codes: 0 success, 1 class violation (or a failed verification),
2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench, oracle
from .detect import BULL_HOUSE, P5_BULL, is_class_member
from .dimacs import parse_dimacs, write_dimacs
from .errors import ClassViolation, GenerationError, GraphInputError, InvariantViolation
from .generate import GenRecipe, Method, generate
from .matching import maximum_matching
from .solver import (
    ColorPartition,
    chromatic_coloring,
    clique_cover,
    verify_coloring,
    verify_cover,
)

EXIT_OK, EXIT_CLASS, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

CLASS_NAMES = {"cover": "(bull,house)-free", "color": "(P5,bull)-free"}
CLASS_PATTERNS = {"cover": BULL_HOUSE, "color": P5_BULL}


def _one_based(parts):
    return [[v + 1 for v in p] for p in parts]


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _load_graph(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_dimacs(text)


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path} is not valid JSON: {exc}") from None


def _base_report(args, parsed, side: str) -> dict:
    return {
        "input": args.file,
        "command": args.command,
        "class": CLASS_NAMES[side],
        "n": parsed.graph.n,
        "m": parsed.graph.m,
        "in_class": True,
        "witness": None,
    }


def _violation(report: dict, exc: ClassViolation, out) -> int:
    report["in_class"] = False
    report["witness"] = exc.witness.to_dict(one_based=True) if exc.witness else None
    _dump(report, out)
    return EXIT_CLASS


def cmd_recognize(args, out) -> int:
    parsed = _load_graph(args.file)
    report = _base_report(args, parsed, args.target)
    ok, witness = is_class_member(parsed.graph, CLASS_PATTERNS[args.target])
    report["in_class"] = ok
    report["witness"] = witness.to_dict(one_based=True) if witness else None
    _dump(report, out)
    return EXIT_OK if ok else EXIT_CLASS


def _solve_report(args, out, side: str) -> int:
    parsed = _load_graph(args.file)
    g = parsed.graph
    report = _base_report(args, parsed, side)
    start = time.perf_counter()
    try:
        if side == "cover":
            result, trace = clique_cover(g)
            verdict = verify_cover(g, result)
            parts = result.parts
        else:
            result, trace = chromatic_coloring(g)
            verdict = verify_coloring(g, result)
            parts = result.classes()
    except ClassViolation as exc:
        return _violation(report, exc, out)
    elapsed = time.perf_counter() - start
    if not verdict:
        raise InvariantViolation(f"refusing to emit an invalid partition: {verdict.reason}")
    report["value"] = len(parts)
    report["parts"] = _one_based(parts)
    if side == "color":
        report["colors"] = list(result.colors)
    report["trace"] = trace.summary()
    report["warnings"] = parsed.warnings
    if args.timing:
        report["wall_time_s"] = elapsed
    _dump(report, out)
    return EXIT_OK


def cmd_cover(args, out) -> int:
    return _solve_report(args, out, "cover")


def cmd_color(args, out) -> int:
    return _solve_report(args, out, "color")


def _zero_based_parts(data, n: int):
    parts = data.get("parts") if isinstance(data, dict) else data
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise GraphInputError("cover file must hold a list of parts or an object with 'parts'")
    return [[int(v) - 1 for v in p] for p in parts]


def _colors(data):
    colors = data.get("colors") if isinstance(data, dict) else data
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise GraphInputError("coloring file must hold a list of colors or an object with 'colors'")
    return colors


def cmd_verify(args, out) -> int:
    g = _load_graph(args.file).graph
    if args.coloring:
        kind = "coloring"
        verdict = verify_coloring(g, ColorPartition(tuple(_colors(_load_json(args.coloring)))), base=1)
    else:
        kind = "cover"
        verdict = verify_cover(g, _zero_based_parts(_load_json(args.cover), g.n), base=1)
    _dump({"input": args.file, "command": "verify", "kind": kind, "valid": verdict.ok,
           "reason": verdict.reason or None}, out)
    return EXIT_OK if verdict else EXIT_CLASS


def cmd_oracle(args, out) -> int:
    g = _load_graph(args.file).graph
    report = {"input": args.file, "command": "oracle"}
    if args.chi:
        k, colors = oracle.brute_chromatic(g)
        report.update(chi=k, colors=list(colors))
    elif args.cc:
        k, parts = oracle.brute_clique_cover(g)
        report.update(cc=k, parts=_one_based(parts))
    else:
        report.update(matching=oracle.brute_matching(g))
        report["blossom_matching"] = len(maximum_matching(g))
    _dump(report, out)
    return EXIT_OK


def _recipe_from_args(args) -> GenRecipe:
    fields = {"seed": args.seed, "method": Method(args.method.upper())}
    for name in ("n", "p", "base", "inner", "depth", "length", "max_attempts"):
        value = getattr(args, name)
        if value is not None:
            fields[name] = value
    return GenRecipe(**fields)


def cmd_gen(args, out) -> int:
    recipe = _recipe_from_args(args)
    g = generate(recipe)
    text = write_dimacs(g, comments=["recipe " + json.dumps(recipe.to_dict(), sort_keys=True)])
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    config = _load_json(args.config)
    if not isinstance(config, dict):
        raise GraphInputError("bench config must be a JSON object")
    result = bench.run_bench(config)
    _dump(result, out)
    s = result["summary"]
    return EXIT_OK if s["all_valid"] and not s["oracle_mismatches"] else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bullfree",
        description="Exact coloring of (P5, bull)-free graphs and clique cover of (bull, house)-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="test class membership, print a witness if any")
    p.add_argument("file")
    p.add_argument("--target", choices=("cover", "color"), default="cover",
                   help="cover: (bull,house)-free (default); color: (P5,bull)-free")
    p.set_defaults(func=cmd_recognize)

    for name, func, text in (
        ("cover", cmd_cover, "minimum clique cover of a (bull,house)-free graph"),
        ("color", cmd_color, "optimal coloring of a (P5,bull)-free graph"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.add_argument("--timing", action="store_true", help="add wall_time_s to the report")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check a coloring or clique cover against a graph")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--coloring", metavar="JSON")
    group.add_argument("--cover", metavar="JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force answers for small graphs")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--chi", action="store_true")
    group.add_argument("--cc", action="store_true")
    group.add_argument("--matching", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a (bull,house)-free instance as DIMACS")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--method", required=True, choices=[m.value.lower() for m in Method] + [m.value for m in Method])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--base")
    p.add_argument("--inner")
    p.add_argument("--depth", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--max-attempts", dest="max_attempts", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="generate, solve and verify a batch of instances")
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (GraphInputError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run_command())
