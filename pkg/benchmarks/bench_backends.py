"""Compare the numba kernels against the pure-numpy fallback.

Runs the nearest-neighbor exploitability scan on identical data with both
implementations, checks the outputs agree, and prints the timings.  Pass
``--pure-numpy`` (or set ``PGAMES_PURE_NUMPY=1``) to confirm the package
itself falls back cleanly; the head-to-head below always times both code
paths directly.

Usage:
    python3 benchmarks/bench_backends.py [--n-train N] [--n-test M]
"""

import argparse
import time

import numpy as np


def sample_games(rng, n):
    return rng.uniform(-1.0, 1.0, size=(n, 4))


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--n-train", type=int, default=100_000)
    parser.add_argument("--n-test", type=int, default=10_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--pure-numpy", action="store_true",
                        help="force the fallback backend for the whole package")
    args = parser.parse_args()

    if args.pure_numpy:
        import os

        os.environ["PGAMES_PURE_NUMPY"] = "1"
    from pgames import kernels

    print(f"selected backend: {kernels.backend_name()}")

    rng = np.random.default_rng(args.seed)
    train = sample_games(rng, args.n_train)
    tests = sample_games(rng, args.n_test)
    p, q, _ = kernels.solve_zs_batch(train)
    _, _, vtest = kernels.solve_zs_batch(tests)
    ks = np.array([1, 10, 100, 1000, args.n_train], dtype=np.int64)

    runners = [("numpy ", kernels.nn_exploitability_numpy)]
    if kernels.HAS_NUMBA:
        runners.insert(0, ("numba ", kernels.nn_exploitability))

    results = {}
    for name, fn in runners:
        fn(train[:64], p[:64], q[:64], tests[:64], vtest[:64], ks[:1])  # warm up
        best = np.inf
        for _ in range(args.repeat):
            start = time.perf_counter()
            out = fn(train, p, q, tests, vtest, ks)
            best = min(best, time.perf_counter() - start)
        results[name] = (best, out)
        print(f"{name}: {best:8.3f}s  "
              f"(t={args.n_train}, m={args.n_test}, ks={[int(k) for k in ks]})")

    if len(results) == 2:
        (t_fast, out_fast), (t_slow, out_slow) = results.values()
        worst = float(np.abs(out_fast - out_slow).max())
        print(f"max abs difference between backends: {worst:.3g}")
        print(f"speedup: {t_slow / t_fast:.1f}x")
        if worst > 1e-12:
            raise SystemExit("backends disagree")


if __name__ == "__main__":
    main()
