"""Benchmark the homomorphism-counting kernel: numba versus numpy fallback.

The numba path is also what you get by default; set VIRTSYM_DISABLE_NUMBA=1
to force the fallback in normal use.  Counts from both paths are asserted
equal here.

Run:  python3 benchmarks/bench_homcount.py
"""

import time

from virtsym.presentations import family
from virtsym.quotients import active_backend, hom_count, parse_target

WORKLOADS = [
    ("virtual_twin(4) -> S4", family("virtual_twin", 4), "S4"),
    ("virtual_triplet(4) -> S4", family("virtual_triplet", 4), "S4"),
    ("triplet(6) -> S4", family("triplet", 6), "S4"),
    ("pvl(4) -> S4", family("pvl", 4), "S4"),
    ("virtual_twin_reduced(5) -> S4", family("virtual_twin_reduced", 5), "S4"),
]


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def main():
    print(f"default backend: {active_backend()}")
    header = f"{'workload':34} {'count':>10} {'numba':>9} {'numpy':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, pres, target_name in WORKLOADS:
        target = parse_target(target_name)
        # warm up jit compilation outside the timed region
        hom_count(pres, target, backend="numba")
        n_count, n_time = timed(lambda: hom_count(pres, target, backend="numba"))
        f_count, f_time = timed(lambda: hom_count(pres, target, backend="numpy"))
        assert n_count == f_count, (name, n_count, f_count)
        speed = f_time / n_time if n_time > 0 else float("inf")
        print(f"{name:34} {n_count:>10} {n_time:>8.3f}s {f_time:>8.3f}s {speed:>7.1f}x")


if __name__ == "__main__":
    main()
