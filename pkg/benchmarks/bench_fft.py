"""Time the FFT backends on the workloads the classifier actually runs.

    python benchmarks/bench_fft.py [--repeat 5] [--batch 128]

Each row is the best-of-``repeat`` wall time for one batched 2-D transform,
plus the max deviation from numpy.fft (used here only as a yardstick).
"""

import argparse
import time

import numpy as np

from ppd import fft as F


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--batch", type=int, default=128)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    # 28 = MNIST, 32 = CIFAR, 37 = prime (Bluestein path), 64 = radix-2
    shapes = [(28, 28), (32, 32), (37, 37), (64, 64)]
    print(f"{'shape':>8} {'batch':>6} {'backend':>9} {'ms':>9} {'speedup':>8} {'max err':>10}")
    for h, w in shapes:
        x = rng.random((args.batch, h, w)) + 0j
        ref = np.fft.fft2(x)
        runs = {name: (lambda b=name: F.fft2(x, backend=b)) for name in F.available_backends()}
        runs["numpy"] = lambda: np.fft.fft2(x)
        times = {name: best_time(fn, args.repeat) for name, fn in runs.items()}
        base = times["python"]
        for name, t in times.items():
            err = float(np.abs(runs[name]() - ref).max())
            print(f"{h}x{w:<5} {args.batch:>6} {name:>9} {1e3 * t:>9.3f} {base / t:>7.2f}x {err:>10.2e}")


if __name__ == "__main__":
    main()
