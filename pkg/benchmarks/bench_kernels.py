"""Compare the numba kernels with the pure-numpy fallback.

The backend is fixed at import time, so each backend runs in its own
subprocess with BULLFREE_PURE_NUMPY set accordingly.

    python benchmarks/bench_kernels.py --sizes 50 100 200 --repeat 3
"""

import argparse
import json
import os
import statistics
import subprocess
import sys
import time


def worker(sizes, repeat):
    import numpy as np

    from bullfree import clique_cover
    from bullfree._accel import backend_name
    from bullfree.detect import BULL_HOUSE, is_class_member
    from bullfree.generate import GenRecipe, Method, generate
    from bullfree.graph import Graph
    from bullfree.kernels import max_matching_mates, maximal_module_labels

    # warm-up so compile time is not counted
    warm = generate(GenRecipe(seed=0, method=Method.SUBSTITUTION, n=20))
    clique_cover(warm)
    max_matching_mates(warm.adjacency)

    def best(fn):
        times = []
        for _ in range(repeat):
            t = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t)
        return statistics.median(times)

    rows = []
    for n in sizes:
        g = generate(GenRecipe(seed=1, method=Method.SUBSTITUTION, n=n))
        rng = np.random.default_rng(n)
        upper = np.triu(rng.random((n, n)) < 4.0 / n, 1)
        sparse = Graph(upper | upper.T)
        rows.append({
            "n": n,
            "detect": best(lambda: is_class_member(g, BULL_HOUSE)),
            "modules": best(lambda: maximal_module_labels(g.bits, g.adjacency)),
            "matching": best(lambda: max_matching_mates(sparse.adjacency)),
            "clique_cover": best(lambda: clique_cover(g)),
        })
    json.dump({"backend": backend_name(), "rows": rows}, sys.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker(args.sizes, args.repeat)
        return

    results = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, BULLFREE_PURE_NUMPY=flag)
        cmd = [sys.executable, __file__, "--worker", "--repeat", str(args.repeat), "--sizes", *map(str, args.sizes)]
        out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
        results[label] = json.loads(out.stdout)

    kernels = ["detect", "modules", "matching", "clique_cover"]
    print(f"{'n':>5} {'kernel':>13} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for a, b in zip(results["numba"]["rows"], results["numpy"]["rows"]):
        for k in kernels:
            ratio = b[k] / a[k] if a[k] > 0 else float("inf")
            print(f"{a['n']:>5} {k:>13} {a[k]:>10.4f} {b[k]:>10.4f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
