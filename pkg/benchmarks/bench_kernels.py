"""Compare the compiled and pure-Python GF(p) kernels.

    python3 benchmarks/bench_kernels.py [--sizes 8 16 32] [--repeat 5]
"""

import argparse
import random
import timeit

from nakayama import _kernels_py

try:
    from nakayama import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64])
    ap.add_argument("--primes", type=int, nargs="+", default=[7, 65521])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    rng = random.Random(0)
    print(f"{'kernel':8} {'p':>6} {'n':>4} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for p in args.primes:
        for n in args.sizes:
            rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
            for name in ("rref", "det"):
                if name == "rref":
                    py = lambda: _kernels_py.rref_modp(rows, n, p)  # noqa: E731
                    cy = (lambda: _ckernels.rref_modp(rows, n, p)) if _ckernels else None  # noqa: E731
                else:
                    py = lambda: _kernels_py.det_modp(rows, p)  # noqa: E731
                    cy = (lambda: _ckernels.det_modp(rows, p)) if _ckernels else None  # noqa: E731
                if cy is not None and cy() != py():
                    raise SystemExit(f"backends disagree on {name} p={p} n={n}")
                t_py = min(timeit.repeat(py, number=3, repeat=args.repeat)) / 3 * 1e3
                if cy is None:
                    print(f"{name:8} {p:>6} {n:>4} {t_py:>10.3f} {'-':>10} {'-':>8}")
                    continue
                t_cy = min(timeit.repeat(cy, number=3, repeat=args.repeat)) / 3 * 1e3
                print(f"{name:8} {p:>6} {n:>4} {t_py:>10.3f} {t_cy:>10.3f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
