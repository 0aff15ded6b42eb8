"""Time the numba W1 kernels against their numpy twins.

    python benchmarks/bench_kernels.py [--rows 200] [--pool 40] [--refs 5] [--ref-size 1600]

The sizes default to one detector scoring call: ``rows`` test points with
``pool`` pooled coordinates each (k * B), scored against ``refs`` reference
subsets of ``ref-size`` values.
"""

import argparse
import time

import numpy as np

from bater import _kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--rows", type=int, default=200)
    p.add_argument("--pool", type=int, default=40)
    p.add_argument("--refs", type=int, default=5)
    p.add_argument("--ref-size", type=int, default=1600)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    if not _kernels.USE_NUMBA:
        print("numba path disabled (BATER_DISABLE_NUMBA); nothing to compare")
        return 0
    rng = np.random.default_rng(0)
    rows = np.sort(rng.normal(size=(args.rows, args.pool)), axis=1)
    refs = [np.sort(rng.normal(size=args.ref_size)) for _ in range(args.refs)]
    flat = np.concatenate(refs)
    offsets = np.r_[0, np.cumsum([len(r) for r in refs])].astype(np.int64)

    # warm the JIT cache before timing
    _kernels.w1_rows_vs_refs(rows[:1], flat, offsets)
    _kernels.w1_sorted(rows[0], refs[0])

    cases = [
        ("w1_rows_vs_refs", lambda: _kernels.w1_rows_vs_refs(rows, flat, offsets),
         lambda: _kernels.numpy_backend["w1_rows_vs_refs"](rows, flat, offsets)),
        ("w1_sorted x1000", lambda: [_kernels.w1_sorted(rows[i % args.rows], refs[i % args.refs]) for i in range(1000)],
         lambda: [_kernels.numpy_backend["w1_sorted"](rows[i % args.rows], refs[i % args.refs]) for i in range(1000)]),
    ]
    print(f"{'kernel':<18} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8} {'max |diff|':>11}")
    for name, fast, slow in cases:
        tf, a = best_of(fast, args.repeat)
        ts, b = best_of(slow, args.repeat)
        diff = float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
        print(f"{name:<18} {tf * 1e3:10.2f} {ts * 1e3:10.2f} {ts / tf:8.1f} {diff:11.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
