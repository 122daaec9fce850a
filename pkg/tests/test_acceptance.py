"""Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
terminal summary) or directly as ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import json
import subprocess
import sys
import tempfile
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bullfree.bench import run_bench  # noqa: E402
from bullfree.cli import run_command  # noqa: E402
from bullfree.detect import (  # noqa: E402
    BULL_HOUSE,
    C5_P5_HOUSE,
    Pattern,
    Witness,
    find_induced,
    is_class_member,
    verify_witness,
)
from bullfree.dimacs import read_dimacs, write_dimacs  # noqa: E402
from bullfree.generate import LIBRARY, GenRecipe, Method, generate  # noqa: E402
from bullfree.graph import Graph, complement  # noqa: E402
from bullfree.matching import maximum_matching  # noqa: E402
from bullfree.modules import quasi_maximal_modules  # noqa: E402
from bullfree.oracle import (  # noqa: E402
    brute_chromatic,
    brute_clique_cover,
    brute_matching,
    maximal_proper_strong_modules,
)
from bullfree.solver import (  # noqa: E402
    chromatic_coloring,
    clique_cover,
    greedy_degree_coloring,
    verify_coloring,
    verify_cover,
)
from corpus import all_upto8, class_upto8  # noqa: E402

pytestmark = pytest.mark.acceptance

RESULTS: dict[int, str] = {}


def _report(k: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
    RESULTS[k] = line
    print(line, flush=True)


def _in_bull_house(g) -> bool:
    return is_class_member(g, BULL_HOUSE)[0]


def _in_c5p5house(g) -> bool:
    return is_class_member(g, C5_P5_HOUSE)[0]


def _triangle_free(g) -> bool:
    return find_induced(g, Pattern.TRIANGLE) is None


# -- shared work for criteria 1-3 and 7 ---------------------------------------

@lru_cache(maxsize=None)
def bull_house_corpus():
    return class_upto8(_in_bull_house)


def _solve_against_oracle(graphs):
    """(mismatches, invalid, worst node-count / n ratio, node-count violations)."""
    mismatches = invalid = over = 0
    worst = 0.0
    for g in graphs:
        cover, trace = clique_cover(g)
        if not verify_cover(g, cover):
            invalid += 1
        if len(cover) != brute_clique_cover(g)[0]:
            mismatches += 1
        if g.n:
            worst = max(worst, trace.node_count() / g.n)
        if trace.node_count() > 2 * g.n:
            over += 1
    return mismatches, invalid, worst, over


@lru_cache(maxsize=None)
def run_criterion_1():
    return _solve_against_oracle(bull_house_corpus())


def generator_recipes() -> list[GenRecipe]:
    rng = np.random.default_rng(2024)
    bases = sorted(LIBRARY)
    recipes = []
    seed = 0
    while len(recipes) < 540:
        n = int(rng.integers(9, 15))
        kind = len(recipes) % 3
        if kind == 0:
            r = GenRecipe(seed=seed, method=Method.REJECTION, n=n, p=float(rng.choice([0.1, 0.15, 0.2, 0.9])))
        elif kind == 1:
            r = GenRecipe(seed=seed, method=Method.SUBSTITUTION, n=n)
        else:
            base = bases[int(rng.integers(len(bases)))]
            r = GenRecipe(seed=seed, method=Method.DUPLICATION_CHAIN, base=base, length=n - LIBRARY[base].n)
        recipes.append(r)
        seed += 1
    return recipes


@lru_cache(maxsize=None)
def generator_instances():
    return tuple(generate(r) for r in generator_recipes())


@lru_cache(maxsize=None)
def run_criterion_3():
    return _solve_against_oracle(generator_instances())


# -- criteria -----------------------------------------------------------------

def criterion_1():
    corpus = bull_house_corpus()
    mism, invalid, _, _ = run_criterion_1()
    by_n = {}
    for g in corpus:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    ok = mism == 0 and invalid == 0
    return ok, f"{len(corpus)} (bull,house)-free graphs n<=8 (per n {by_n}), {mism} mismatches, {invalid} invalid"


def criterion_2():
    mism = invalid = 0
    corpus = bull_house_corpus()
    for h in corpus:
        g = complement(h)
        col, _ = chromatic_coloring(g)
        if not verify_coloring(g, col):
            invalid += 1
        if col.k != brute_chromatic(g)[0]:
            mism += 1
    return mism == 0 and invalid == 0, f"{len(corpus)} complements, {mism} mismatches, {invalid} invalid"


def criterion_3():
    insts = generator_instances()
    recipes = generator_recipes()
    per_method = {m.value: sum(r.method is m for r in recipes) for m in Method}
    sizes = sorted({g.n for g in insts})
    mism, invalid, _, _ = run_criterion_3()
    ok = mism == 0 and invalid == 0 and len(insts) >= 500 and min(sizes) >= 9 and max(sizes) <= 14
    return ok, f"{len(insts)} instances {per_method}, n in {sizes[0]}..{sizes[-1]}, {mism} mismatches, {invalid} invalid"


def criterion_4():
    corpus = class_upto8(_in_c5p5house)
    bad = sum(greedy_degree_coloring(g).k != brute_chromatic(g)[0] or not verify_coloring(g, greedy_degree_coloring(g))
              for g in corpus)
    return bad == 0, f"{len(corpus)} (C5,P5,house)-free graphs n<=8, {bad} non-optimal"


def criterion_5():
    # triangle-free members of the corpus, triangle-free generator output,
    # and random triangle-free graphs up to the oracle cap
    pool = [g for g in bull_house_corpus() if _triangle_free(g)]
    pool += [g for g in generator_instances() if _triangle_free(g)]
    rng = np.random.default_rng(5)
    random_count = 0
    while random_count < 300:
        n = int(rng.integers(9, 17))
        upper = np.triu(rng.random((n, n)) < rng.uniform(0.1, 0.35), 1)
        g = Graph(upper | upper.T)
        if _triangle_free(g):
            pool.append(g)
            random_count += 1
    law = matching = 0
    for g in pool:
        m = len(maximum_matching(g))
        if m != brute_matching(g):
            matching += 1
        if _in_bull_house(g):
            cover, trace = clique_cover(g)
            if len(cover) != g.n - m:
                law += 1
    ok = law == 0 and matching == 0
    return ok, f"{len(pool)} triangle-free graphs (n<=16), {law} size-law failures, {matching} matching mismatches"


def criterion_6():
    corpus = [g for g in all_upto8() if g.n >= 2]
    bad = sum(sorted(quasi_maximal_modules(g).parts) != maximal_proper_strong_modules(g) for g in corpus)
    return bad == 0, f"{len(corpus)} graphs 2<=n<=8, {bad} disagreements"


def criterion_7():
    _, _, w1, o1 = run_criterion_1()
    _, _, w3, o3 = run_criterion_3()
    # criterion 2 solves complements of complements, i.e. the corpus itself
    over = o1 + o3
    return over == 0, f"max nodes/n = {max(w1, w3):.2f} (bound 2), {over} violations"


def criterion_8():
    config = {"grid": {"method": "SUBSTITUTION", "n": [100, 200, 400], "seeds": [0, 1, 2]}}
    summary = run_bench(config)["summary"]
    med = summary["median_time_s"]
    slope = summary["loglog_slope"]
    ok = summary["all_valid"] and slope is not None and slope <= 5.5 and med["400"] < 300
    times = ", ".join(f"n={n}: {t:.3f}s" for n, t in med.items())
    return ok, f"medians {times}; log-log slope {slope:.2f} (limit 5.5)"


def _violating_graphs(count: int):
    rng = np.random.default_rng(9)
    out = []
    while len(out) < count:
        n = int(rng.integers(5, 31))
        upper = np.triu(rng.random((n, n)) < rng.uniform(0.2, 0.8), 1)
        g = Graph(upper | upper.T)
        if not _in_bull_house(g):
            out.append(g)
    return out


def criterion_9():
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for i, g in enumerate(_violating_graphs(100)):
            path = Path(tmp) / f"g{i}.col"
            path.write_text(write_dimacs(g))
            out = io.StringIO()
            code = run_command(["cover", str(path)], out)
            report = json.loads(out.getvalue())
            w = report.get("witness")
            good = (
                code == 1
                and report["in_class"] is False
                and "parts" not in report
                and "value" not in report
                and w is not None
                and w["pattern"] in ("BULL", "HOUSE")
                and verify_witness(g, Witness(Pattern[w["pattern"]], tuple(v - 1 for v in w["vertices"])))
            )
            failures += not good
    return failures == 0, f"100 graphs with a bull or house, {failures} without exit 1 plus a valid witness"


def criterion_10():
    def cli(*args, cwd):
        proc = subprocess.run([sys.executable, "-m", "bullfree", *args], cwd=cwd, capture_output=True)
        return proc.returncode, proc.stdout

    differing = []
    with tempfile.TemporaryDirectory() as tmp:
        cases = [
            ("gen", "--seed", "3", "--method", "substitution", "--n", "60", "-o", "sub.col"),
            ("gen", "--seed", "4", "--method", "rejection", "--n", "10", "--p", "0.3", "-o", "rej.col"),
            ("gen", "--seed", "5", "--method", "duplication_chain", "--base", "C5", "--length", "20", "-o", "dup.col"),
        ]
        for args in cases:
            cli(*args, cwd=tmp)
        files = {}
        for name in ("sub.col", "rej.col", "dup.col"):
            files[name] = (Path(tmp) / name).read_bytes()
            comp = write_dimacs(complement(read_dimacs(files[name].decode())))
            (Path(tmp) / f"co_{name}").write_text(comp)
        commands = [("cover", n) for n in files] + [("color", f"co_{n}") for n in files]
        commands += [("recognize", n) for n in files]
        first = [cli(*c, cwd=tmp) for c in commands]
        for args in cases:
            cli(*args, cwd=tmp)
        for name, data in files.items():
            if (Path(tmp) / name).read_bytes() != data:
                differing.append(name)
        second = [cli(*c, cwd=tmp) for c in commands]
        differing += [" ".join(c) for c, a, b in zip(commands, first, second) if a != b]
        all_ok = all(code == 0 for code, _ in first)
    return not differing and all_ok, f"{len(cases)} generated files and {len(commands)} reports compared, {len(differing)} differ"


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 11)}


@pytest.mark.parametrize("k", list(CRITERIA))
def test_criterion(k):
    try:
        ok, detail = CRITERIA[k]()
    except Exception as exc:
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    _report(k, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    status = 0
    for k, fn in CRITERIA.items():
        try:
            ok, detail = fn()
        except Exception as exc:
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        _report(k, ok, detail)
        status |= not ok
    sys.exit(status)
