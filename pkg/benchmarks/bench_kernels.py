#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Micro-benchmarks call both implementations directly; the end-to-end row
rebuilds the order-4 symbolic number table in a subprocess per
implementation (kernel selection is fixed at import time, so a fresh
interpreter is the honest way to compare).

Run:  python benchmarks/bench_kernels.py
"""

import os
import subprocess
import sys
import time
from fractions import Fraction
from random import Random

import apobern._kernels._pure as pure

try:
    import apobern._kernels._speedups as speedups
except ImportError:
    speedups = None


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def rational_vectors(rng, length):
    fracs = [Fraction(rng.randint(-99, 99), rng.randint(1, 60)) for _ in range(length)]
    return [f.numerator for f in fracs], [f.denominator for f in fracs]


def bench_conv_frac(impl):
    rng = Random(1)
    an, ad = rational_vectors(rng, 64)
    bn, bd = rational_vectors(rng, 64)

    def run():
        for _ in range(40):
            impl.conv_frac(an, ad, bn, bd, 64)

    return run


def bench_recip_frac(impl):
    rng = Random(2)
    an, ad = rational_vectors(rng, 64)
    if an[0] == 0:
        an[0] = 1

    def run():
        for _ in range(40):
            impl.recip_frac(an, ad, 64)

    return run


def bench_prim_gcd(impl):
    rng = Random(3)
    cases = []
    for _ in range(30):
        h = [rng.randint(-9, 9) for _ in range(6)]
        a = [rng.randint(-9, 9) for _ in range(8)]
        b = [rng.randint(-9, 9) for _ in range(8)]
        h[-1] = h[-1] or 1
        a[-1] = a[-1] or 1
        b[-1] = b[-1] or 1
        cases.append((pure.conv_int(a, h), pure.conv_int(b, h)))

    def run():
        for f, g in cases:
            impl.prim_gcd_int(f, g)

    return run


def bench_end_to_end(pure_mode: bool) -> float:
    code = (
        "import time\n"
        "from apobern import LambdaMode\n"
        "from apobern.families import apostol_bernoulli_numbers\n"
        "start = time.perf_counter()\n"
        "apostol_bernoulli_numbers(4, 10, LambdaMode.symbolic())\n"
        "print(time.perf_counter() - start)\n"
    )
    env = dict(os.environ)
    if pure_mode:
        env["APOBERN_PURE"] = "1"
    else:
        env.pop("APOBERN_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip())


def main():
    rows = []
    for name, factory in (
        ("conv_frac 64x64 x40", bench_conv_frac),
        ("recip_frac order 64 x40", bench_recip_frac),
        ("prim_gcd_int 30 pairs", bench_prim_gcd),
    ):
        pure_time = timeit(factory(pure))
        if speedups is not None:
            fast_time = timeit(factory(speedups))
            rows.append((name, pure_time, fast_time))
        else:
            rows.append((name, pure_time, None))

    if speedups is not None:
        pure_e2e = bench_end_to_end(pure_mode=True)
        fast_e2e = bench_end_to_end(pure_mode=False)
        rows.append(("symbolic table k=4 n=10 (subprocess)", pure_e2e, fast_e2e))

    print(f"{'benchmark':<40} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, pure_time, fast_time in rows:
        if fast_time is None:
            print(f"{name:<40} {pure_time * 1e3:>8.1f}ms {'n/a':>10} {'n/a':>8}")
        else:
            print(
                f"{name:<40} {pure_time * 1e3:>8.1f}ms {fast_time * 1e3:>8.1f}ms "
                f"{pure_time / fast_time:>7.2f}x"
            )
    if speedups is None:
        print("\ncompiled kernels not built; showing pure-Python timings only")


if __name__ == "__main__":
    main()
