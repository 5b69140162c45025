"""Benchmark the compiled kernels against the pure-NumPy fallback.

    python -m jordanmm.bench [--batch N] [--repeats R]

Times the batched octonion product and the batched 3x3 Jordan product on
both backends (real and bioctonionic coefficients) and prints the speedup.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from . import _kernels_py
from . import kernels
from .sampling import Sampler

try:
    from . import _speedups
except ImportError:
    _speedups = None


def _time(fn, *args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def run(batch: int, repeats: int) -> list:
    sampler = Sampler(2024)
    cases = [
        ("mul_batch f8", "mul_batch",
         (sampler._uniform(batch, 8), sampler._uniform(batch, 8))),
        ("mul_batch c16", "mul_batch",
         (sampler._uniform(batch, 8) + 1j * sampler._uniform(batch, 8),
          sampler._uniform(batch, 8) + 1j * sampler._uniform(batch, 8))),
        ("jordan_batch h3(O)", "jordan_batch",
         (sampler.hermitian_batch(batch, 3, "O"), sampler.hermitian_batch(batch, 3, "O"))),
        ("jordan_batch h3(CO)", "jordan_batch",
         (sampler.hermitian_batch(batch, 3, "CO"), sampler.hermitian_batch(batch, 3, "CO"))),
    ]
    rows = []
    for label, fn_name, args in cases:
        args = tuple(np.ascontiguousarray(a) for a in args)
        t_py = _time(getattr(_kernels_py, fn_name), *args, repeats=repeats)
        if _speedups is not None:
            t_ext = _time(getattr(_speedups, fn_name), *args, repeats=repeats)
            ours = getattr(_speedups, fn_name)(*args)
            theirs = getattr(_kernels_py, fn_name)(*args)
            gap = float(np.max(np.abs(ours - theirs)))
        else:
            t_ext, gap = float("nan"), float("nan")
        rows.append((label, t_py, t_ext, gap))
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--batch", type=int, default=20000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args(argv)

    print(f"active backend: {kernels.BACKEND}   batch={args.batch}  repeats={args.repeats}")
    if _speedups is None:
        print("compiled extension not available; timing the fallback only")
    header = f"{'kernel':24} {'python':>10} {'compiled':>10} {'speedup':>8} {'max diff':>10}"
    print(header)
    print("-" * len(header))
    for label, t_py, t_ext, gap in run(args.batch, args.repeats):
        speedup = t_py / t_ext if t_ext == t_ext and t_ext > 0 else float("nan")
        print(f"{label:24} {t_py * 1e3:9.2f}ms {t_ext * 1e3:9.2f}ms {speedup:7.1f}x {gap:10.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
