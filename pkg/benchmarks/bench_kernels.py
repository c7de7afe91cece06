"""Compare the compiled and numpy minimum-Lee-weight kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--workers 1]

Cases are the largest derived codes of the shipped manifest plus random
generator matrices of growing size. Both backends must agree; the script
exits 1 if they do not.
"""

import argparse
import statistics
import sys
import time

import numpy as np

from skewz4 import kernels
from skewz4.analysis import build_code, derived_code, load_manifest


def manifest_cases():
    wanted = {("T2.g8", "plotkin"), ("T2.g7", "plotkin"), ("T1.4", "res"), ("T2.g12", "tor")}
    for e in load_manifest():
        for sel in e.expected:
            if (e.label, sel) in wanted:
                code = derived_code(build_code(e.poly(), e.n, e.k), sel, e.plotkin_operand)
                yield f"{e.label}/{sel} n={code.n}", code.standard.binary_generators()


def random_cases(seed=0):
    rng = np.random.default_rng(seed)
    for k, n in ((12, 16), (16, 24), (20, 32), (22, 32)):
        yield f"random k={k} n={n}", rng.integers(0, 4, (k, n)).astype(np.uint8)


def timed(gens, backend, workers, repeat):
    runs, value = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        value = kernels.min_lee_weight(gens, workers=workers, backend=backend)
        runs.append(time.perf_counter() - t)
    return value, statistics.median(runs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    backends = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(backends)} (default {kernels.BACKEND}), workers={args.workers}")
    header = f"{'case':28s} {'words':>10s} " + " ".join(f"{b + ' [s]':>12s}" for b in backends)
    if "cython" in backends:
        header += f" {'speedup':>8s}"
    print(header)
    ok = True
    for name, gens in list(manifest_cases()) + list(random_cases()):
        results = {b: timed(gens, b, args.workers, args.repeat) for b in backends}
        values = {v for v, _ in results.values()}
        ok &= len(values) == 1
        line = f"{name:28s} {2 ** gens.shape[0]:>10d} " + " ".join(f"{results[b][1]:>12.4f}" for b in backends)
        if "cython" in backends:
            line += f" {results['python'][1] / max(results['cython'][1], 1e-9):>7.1f}x"
        if len(values) != 1:
            line += "  MISMATCH"
        print(line)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
