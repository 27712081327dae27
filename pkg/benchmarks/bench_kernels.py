"""Compare the compiled kernels with the pure-Python fallback.

Micro benchmarks call both modules side by side in this process.  The
end-to-end timings (hull of the d=5 witness sum, full verification of a
d=4 witness) run in subprocesses so that ``MINKSUM_PURE_PYTHON`` picks the
backend at import, exactly as a user would see it.

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from minksum import kernels

END_TO_END = """
import time
from minksum import kernels
from minksum.cayley import CayleyComplex, direct_minkowski_sum, verification_report
from minksum.witness import even_witness, odd_witness
P1, P2, _ = odd_witness(5, 7, 7)
t = time.perf_counter()
direct_minkowski_sum(P1, P2)
hull = time.perf_counter() - t
t = time.perf_counter()
verification_report(CayleyComplex.build(*even_witness(4, 7, 6)))
verify = time.perf_counter() - t
print(kernels.BACKEND, hull, verify)
"""


def _matrices(rng, n, count, size=10**6):
    return [[[rng.randint(-size, size) for _ in range(n)] for _ in range(n)] for _ in range(count)]


def micro(repeat: int) -> list[tuple[str, float, float]]:
    rng = random.Random(0)
    mats = _matrices(rng, 7, 200)
    wide = [[[rng.randint(-99, 99) for _ in range(8)] for _ in range(7)] for _ in range(200)]
    normal = [rng.randint(-50, 50) for _ in range(7)]
    points = [[1] + [rng.randint(-50, 50) for _ in range(6)] for _ in range(2000)]
    if kernels.BACKEND != "cython":
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    from minksum import _ckernels as fast

    cases = [
        ("det_int 7x7 (x200)", lambda m: [m.det_int(a) for a in mats]),
        ("kernel_vector 7x8 (x200)", lambda m: [m.kernel_vector(a, 8) for a in wide]),
        ("side_signs 2000 pts", lambda m: m.side_signs(normal, points)),
    ]
    rows = []
    for name, fn in cases:
        slow = min(timeit.repeat(lambda: fn(kernels.pure), number=1, repeat=repeat))
        quick = min(timeit.repeat(lambda: fn(fast), number=1, repeat=repeat))
        rows.append((name, slow, quick))
    return rows


def end_to_end(pure: bool) -> tuple[str, float, float]:
    env = dict(os.environ)
    if pure:
        env["MINKSUM_PURE_PYTHON"] = "1"
    else:
        env.pop("MINKSUM_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True, capture_output=True, text=True)
    backend, hull, verify = out.stdout.split()
    return backend, float(hull), float(verify)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'kernel':<28}{'python (s)':>12}{'cython (s)':>12}{'speedup':>9}")
    for name, slow, quick in micro(args.repeat):
        print(f"{name:<28}{slow:>12.4f}{quick:>12.4f}{slow / quick:>8.2f}x")

    print()
    print(f"{'end to end':<28}{'python (s)':>12}{'cython (s)':>12}{'speedup':>9}")
    py = end_to_end(pure=True)
    cy = end_to_end(pure=False)
    assert py[0] == "python" and cy[0] == "cython", (py[0], cy[0])
    for label, i in (("hull of d=5 witness sum", 1), ("verify d=4 (7,6) witness", 2)):
        print(f"{label:<28}{py[i]:>12.4f}{cy[i]:>12.4f}{py[i] / cy[i]:>8.2f}x")


if __name__ == "__main__":
    main()
