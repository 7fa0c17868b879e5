"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is called once before timing so numba compilation is excluded.
Reports the best of ``--repeat`` runs in milliseconds.
"""

import argparse
import time

import numpy as np

from dslq._kernels import jitted, vectorized
from dslq.graph import random_graph
from dslq.spectra import dsl_matrix


def best_ms(fn, args, repeat):
    fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return 1e3 * min(times)


def cases(gen):
    for n in (30, 120, 400):
        g = random_graph(n, 0.05, gen, connected=True)
        yield f"bfs_distances n={n}", "bfs_distances", (g.adjacency.astype(np.uint8),)
    for n in (16, 40, 64):
        q = dsl_matrix(random_graph(n, 0.2, gen, connected=True)).astype(float)
        yield f"jacobi_eigenvalues n={n}", "jacobi_eigenvalues", (q, 100)
    for n in (100, 300):
        q = dsl_matrix(random_graph(n, 0.05, gen, connected=True)).astype(float)
        yield f"power_iteration n={n}", "power_iteration", (q, 0.0, 1e-10, 100000)
    for n in (14, 18, 20):
        g = random_graph(n, 0.25, gen)
        yield f"deficiency_scan n={n}", "deficiency_scan", (g.neighbor_masks(), n)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'kernel':<28}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for label, name, inputs in cases(np.random.default_rng(args.seed)):
        a = best_ms(getattr(jitted, name), inputs, args.repeat)
        b = best_ms(getattr(vectorized, name), inputs, args.repeat)
        print(f"{label:<28}{a:>12.3f}{b:>12.3f}{b / a:>9.1f}x")


if __name__ == "__main__":
    main()
