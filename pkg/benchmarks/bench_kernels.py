"""Compare character expansion backends: compiled kernel, NumPy kernel, dictionary convolution.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from qlinkage import _kernels
from qlinkage.catalog import resolve
from qlinkage.characters import geometric_product
from qlinkage.groupoid import orbit
from qlinkage.rootsystem import root_system

CASES = ["super-A11(5)", "cartan-B2(7)", "cartan-G2(7)", "cartan-A3(5)", "cartan-B3(7)"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"active backend: {_kernels.BACKEND}")
    print(f"{'matrix':<14} {'dim':>10} {'compiled':>10} {'numpy':>10} {'dict':>10}")
    for key in CASES:
        q = resolve(key)
        rs = root_system(orbit(q))
        factors = [((0,) * q.theta, tuple(-c for c in r), rs.b[r]) for r in rs.positive_roots]

        def expand(backend):
            return geometric_product(q.theta, factors, backend)

        ref = expand("dict") if rs.dimension() < 300_000 else None
        row = []
        for backend in (None, "numpy", "dict"):
            if backend == "dict" and ref is None:
                row.append(float("nan"))
                continue
            out = expand(backend)
            if ref is not None and out != ref:
                raise SystemExit(f"{key}: backend {backend or _kernels.BACKEND} disagrees with the dictionary expansion")
            t = min(timeit.repeat(lambda: expand(backend), number=1, repeat=args.repeat))
            row.append(t * 1e3)
        print(f"{key:<14} {rs.dimension():>10} " + " ".join(f"{x:>8.2f}ms" for x in row))
    raw_kernel(args.repeat)


def raw_kernel(repeat):
    """The single strided running sum on a flat grid; the compiled cost is independent of ``count``."""
    rng = np.random.default_rng(0)
    grid = rng.integers(0, 5, size=1_000_000, dtype=np.int64)
    print(f"\n{'count':>6} {'compiled':>10} {'numpy':>10}")
    for count in (2, 8, 32, 128):
        row = []
        for spread in (_kernels.geometric_spread, _kernels.python_backend.geometric_spread):
            row.append(min(timeit.repeat(lambda: spread(grid, 37, count), number=1, repeat=repeat)) * 1e3)
        if not np.array_equal(_kernels.geometric_spread(grid, 37, count), _kernels.python_backend.geometric_spread(grid, 37, count)):
            raise SystemExit(f"kernels disagree at count {count}")
        print(f"{count:>6} " + " ".join(f"{x:>8.2f}ms" for x in row))


if __name__ == "__main__":
    main()
