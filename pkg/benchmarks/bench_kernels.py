"""Compare the compiled and pure-Python kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both modules directly. The end-to-end timing runs a
small bench in a subprocess per backend, with IDSLEARN_PURE selecting the
fallback.
"""
import argparse
import os
import subprocess
import sys
import timeit
from array import array

from idslearn import _pykernels
from idslearn.generators import random_dfa, random_words

try:
    from idslearn import _ckernels
except ImportError:
    _ckernels = None

E2E = (
    "import time; from idslearn.bench import BenchSpec, run_records; from idslearn import kernels; "
    "t = time.perf_counter(); run_records(BenchSpec(state_sizes=[30, 40, 50], trials_per_size=5)); "
    "print(kernels.BACKEND, time.perf_counter() - t)"
)


def kernel_cases():
    dfa = random_dfa(200, 2, 1)
    words = random_words(2, 40, 400, seed=2)
    states = array("i", range(200))
    flat, fin = dfa.flat, dfa.final_flags
    return {
        "walk": lambda m: [m.walk(flat, 2, 0, x) for x in words],
        "accept_mask": lambda m: [m.accept_mask(flat, 2, fin, states, x) for x in words[:50]],
        "accept_bits": lambda m: m.accept_bits(flat, 2, fin, 0, words),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; nothing to compare")
    else:
        print(f"{'kernel':<12} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
        for name, fn in kernel_cases().items():
            py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1000
            cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1000
            print(f"{name:<12} {py:>10.3f} {cy:>10.3f} {py / cy:>7.1f}x")
    print("\nend-to-end bench (sizes 30,40,50 x 5 trials):")
    for pure in ("0", "1"):
        env = dict(os.environ, IDSLEARN_PURE=pure)
        out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"  {backend:<7} {float(secs):.2f}s")


if __name__ == "__main__":
    main()
