"""Compare the compiled and pure-Python F_p polynomial kernels.

    python3 benchmarks/bench_kernels.py [--degree 64] [--repeat 200]

Also times two end-to-end workloads under each backend, switching with the
HIGGSLAB_PURE environment variable in a subprocess: small split constructions,
where object overhead dominates, and a large polynomial determinant, where
the kernels do.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from higgslab import _pykernels as py
from higgslab import kernels

P = 1000003

END_TO_END = """
import random, time
from higgslab.spectral import random_regular_coeffs, branch_points
from higgslab.splitbuilder import SplitSpec, build_split
rng = random.Random(0)
t = time.perf_counter()
for p in (1, 2, 3):
    for _ in range(10):
        sc = random_regular_coeffs(p, rng, max_deg_ap=8)
        build_split(SplitSpec(sc, tuple(rng.choice((1, -1)) for _ in branch_points(sc))))
print(time.perf_counter() - t)
"""

HEAVY = """
import random, time
from higgslab.exactcore import Field, Mat, Poly
F = Field()
rng = random.Random(0)
A = Mat([[Poly([F.random(rng) for _ in range(25)], F) for _ in range(6)] for _ in range(6)], F)
t = time.perf_counter()
for _ in range(3):
    A.det()
print(time.perf_counter() - t)
"""


def _operands(degree: int, rng: random.Random):
    a = [rng.randrange(P) for _ in range(degree + 1)]
    b = [rng.randrange(P) for _ in range(degree // 2 + 1)]
    a[-1] = a[-1] or 1
    b[-1] = b[-1] or 1
    return a, b


def bench_kernels(degree: int, repeat: int) -> list:
    rng = random.Random(1)
    a, b = _operands(degree, rng)
    x = rng.randrange(P)
    calls = {
        "poly_add": (a, b, P),
        "poly_mul": (a, b, P),
        "poly_divmod": (a, b, P),
        "poly_eval": (a, x, P),
    }
    rows = []
    for name, args in calls.items():
        t_py = timeit.timeit(lambda: getattr(py, name)(*args), number=repeat)
        if kernels.compiled is None:
            rows.append((name, t_py, None))
            continue
        assert getattr(kernels.compiled, name)(*args) == getattr(py, name)(*args)
        t_c = timeit.timeit(lambda: getattr(kernels.compiled, name)(*args), number=repeat)
        rows.append((name, t_py, t_c))
    return rows


def bench_script(script: str) -> dict:
    out = {}
    for label, extra in (("cython", {}), ("python", {"HIGGSLAB_PURE": "1"})):
        env = dict(os.environ, **extra)
        res = subprocess.run([sys.executable, "-c", script], env=env,
                             capture_output=True, text=True, check=True)
        out[label] = float(res.stdout)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=64)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    print(f"backend available: {kernels.BACKEND}")
    print(f"{'kernel':<12} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for name, t_py, t_c in bench_kernels(args.degree, args.repeat):
        per_py = 1e3 * t_py / args.repeat
        if t_c is None:
            print(f"{name:<12} {per_py:12.4f} {'-':>12} {'-':>8}")
        else:
            per_c = 1e3 * t_c / args.repeat
            print(f"{name:<12} {per_py:12.4f} {per_c:12.4f} {t_py / t_c:8.1f}x")
    for label, script in (("split construction, 30 instances", END_TO_END),
                          ("6x6 determinant, degree-24 entries, x3", HEAVY)):
        t = bench_script(script)
        print(f"{label}: cython {t['cython']:.2f}s, python {t['python']:.2f}s, "
              f"speedup {t['python'] / t['cython']:.1f}x")


if __name__ == "__main__":
    main()
