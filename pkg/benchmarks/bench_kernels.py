"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from relspin import linalg
from relspin.scan import ScanConfig, run_scan

SCAN = ScanConfig(scenario="bell-phi", family="czachor", beta_steps=20, gamma_steps=20)


def kernels():
    rng = np.random.default_rng(0)
    a = linalg.matrix(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    b = linalg.matrix(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    big = linalg.kron(a, b)
    h = linalg.matrix(big + linalg.adjoint(big))
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    v = linalg.vector(v / np.linalg.norm(v))
    return {
        "kron 2x2": lambda: linalg.kron(a, b),
        "matmul 4x4": lambda: linalg.matmul(big, big),
        "apply 4x4": lambda: linalg.apply(big, v),
        "expectation 4x4": lambda: linalg.expectation(v, h),
        "scan 20x20": lambda: run_scan(SCAN),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    backends = linalg.available_backends()
    timings = {}
    for name in backends:
        previous = linalg.use_backend(name)
        try:
            for label, fn in kernels().items():
                number = 3 if label.startswith("scan") else 20000
                best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
                timings[label, name] = best
        finally:
            linalg.use_backend(previous)

    labels = list(dict.fromkeys(label for label, _ in timings))
    print(f"{'kernel':<18}" + "".join(f"{b:>14}" for b in backends) + ("    speedup" if len(backends) > 1 else ""))
    for label in labels:
        row = f"{label:<18}" + "".join(f"{timings[label, b] * 1e6:>12.2f}us" for b in backends)
        if {"cython", "python"} <= set(backends):
            row += f"   {timings[label, 'python'] / timings[label, 'cython']:>7.1f}x"
        print(row)
    if len(backends) == 1:
        print("compiled backend unavailable; only the pure-Python kernels were timed")


if __name__ == "__main__":
    main()
