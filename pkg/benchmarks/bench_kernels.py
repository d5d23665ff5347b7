"""Compare the numba and numpy backends on the counting kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each case runs once untimed so JIT compilation is not counted.
"""

import argparse
import statistics
import time

from singcurve import accel, oracle
from singcurve.ff import enumerate_monic_irreducibles, field_of_order

F8 = field_of_order(8)
CASES = {
    "scan_weierstrass q=7": lambda: oracle.scan_weierstrass(7, keep=1),
    "curve_b_count q=4 n=3": lambda: oracle.curve_b_count(4, 3),
    "irreducibles q=4 d=6": lambda: enumerate_monic_irreducibles(2, 2, 6),
    "weierstrass_count F_8 n=4": lambda: oracle.weierstrass_count(oracle.WeierstrassCurve.from_ints(F8, 1, 0, 0, 0, 1), 4),
}


def timed(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [b for b in accel.BACKENDS if b == "numpy" or accel.HAVE_NUMBA]
    print(f"{'case':<28}" + "".join(f"{b:>12}" for b in backends) + ("    speedup" if len(backends) == 2 else ""))
    for name, fn in CASES.items():
        row = {}
        for b in backends:
            with accel.use_backend(b):
                row[b] = timed(fn, args.repeat)
        line = f"{name:<28}" + "".join(f"{row[b]:>11.4f}s" for b in backends)
        if len(backends) == 2:
            line += f"{row['numpy'] / row['numba']:>10.1f}x"
        print(line)


if __name__ == "__main__":
    main()
