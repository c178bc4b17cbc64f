"""Benchmark the compiled series kernels against the pure-Python fallback.

Run as: python benchmarks/bench_series.py

Times truncated convolution and composition over GF(5) at several orders
and prints one table row per (operation, order) with the speedup.
"""

import random
import time

from padicore._kernels import available_backends, get_backend


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    p = 5
    rng = random.Random(20240607)
    backends = {name: get_backend(name) for name in available_backends()}
    print(f"available kernel backends: {', '.join(backends)}")
    header = f"{'operation':<12} {'order':>6}" + "".join(
        f" {name + ' (ms)':>15}" for name in backends
    )
    if len(backends) > 1:
        header += f" {'speedup':>9}"
    print(header)
    for n in (32, 63, 128, 256):
        a = [rng.randrange(p) for _ in range(n)]
        b = [rng.randrange(p) for _ in range(n)]
        g = [0] + [rng.randrange(p) for _ in range(n - 1)]
        repeats = 5 if n <= 128 else 3
        for label, call in (
            ("convolve", lambda m: m.convolve_mod(a, b, n, p)),
            ("compose", lambda m: m.compose_mod(a, g, n, p)),
        ):
            times = {}
            for name, mod in backends.items():
                times[name] = _time(lambda: call(mod), repeats)
            row = f"{label:<12} {n:>6}" + "".join(
                f" {times[name] * 1e3:>15.3f}" for name in backends
            )
            if "pure" in times and "compiled" in times:
                row += f" {times['pure'] / times['compiled']:>8.1f}x"
            print(row)
    for name, mod in backends.items():
        sample = mod.compose_mod([1, 2, 3, 4], [0, 1, 4, 2], 4, p)
        assert sample == backends["pure"].compose_mod(
            [1, 2, 3, 4], [0, 1, 4, 2], 4, p
        ), f"backend {name} disagrees"


if __name__ == "__main__":
    main()
