"""Generate-solve-verify loop behind ``bullfree bench``.

Config is a JSON object. Instances come from an explicit ``recipes`` list,
a ``grid`` that expands to one recipe per (n, seed), or both::

    {
      "grid": {"method": "SUBSTITUTION", "n": [100, 200, 400], "seeds": [0, 1, 2]},
      "recipes": [{"seed": 7, "method": "REJECTION", "n": 10, "p": 0.4}],
      "oracle_max_n": 14
    }

Instances with at most ``oracle_max_n`` vertices are also checked against
the brute-force oracle.
"""

from __future__ import annotations

import statistics
import time

import numpy as np

from .errors import GraphInputError
from .generate import GenRecipe, generate
from .oracle import brute_clique_cover
from .solver import clique_cover, verify_cover


def expand_config(config: dict) -> list[GenRecipe]:
    try:
        recipes = [GenRecipe.from_dict(r) for r in config.get("recipes", [])]
        grid = config.get("grid")
        if grid:
            grid = dict(grid)
            sizes = grid.pop("n")
            seeds = grid.pop("seeds", [0])
            for n in sizes:
                for seed in seeds:
                    recipes.append(GenRecipe.from_dict({**grid, "n": n, "seed": seed}))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"bad bench config: {exc}") from None
    return recipes


def loglog_slope(sizes, times) -> float | None:
    """Least-squares slope of log(time) against log(n)."""
    pts = [(n, t) for n, t in zip(sizes, times) if t > 0]
    if len({n for n, _ in pts}) < 2:
        return None
    x = np.log([n for n, _ in pts])
    y = np.log([t for _, t in pts])
    return float(np.polyfit(x, y, 1)[0])


def run_instance(recipe: GenRecipe, oracle_max_n: int = 14) -> dict:
    g = generate(recipe)
    start = time.perf_counter()
    cover, trace = clique_cover(g)
    elapsed = time.perf_counter() - start
    row = {
        "recipe": recipe.to_dict(),
        "n": g.n,
        "m": g.m,
        "value": len(cover),
        "nodes": trace.node_count(),
        "valid": bool(verify_cover(g, cover)),
        "time_s": elapsed,
    }
    if g.n <= oracle_max_n:
        row["oracle_value"] = brute_clique_cover(g)[0]
    return row


def run_bench(config: dict) -> dict:
    oracle_max_n = int(config.get("oracle_max_n", 14))
    rows = [run_instance(r, oracle_max_n) for r in expand_config(config)]
    by_n: dict[int, list[float]] = {}
    for row in rows:
        by_n.setdefault(row["n"], []).append(row["time_s"])
    medians = {n: statistics.median(ts) for n, ts in sorted(by_n.items())}
    summary = {
        "instances": len(rows),
        "all_valid": all(r["valid"] for r in rows),
        "oracle_mismatches": sum(
            1 for r in rows if "oracle_value" in r and r["oracle_value"] != r["value"]
        ),
        "median_time_s": {str(n): t for n, t in medians.items()},
        "loglog_slope": loglog_slope(list(medians), list(medians.values())),
    }
    return {"instances": rows, "summary": summary}
