"""Compare the compiled and pure-Python kernel backends.

Kernel timings call both implementations directly in one process. The
end-to-end timings run ``qes verify`` style workloads in subprocesses with
``QES_PURE_PYTHON`` toggled, since the backend is fixed at import.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from qes import _kernels_py

try:
    from qes import _kernels as _compiled
except ImportError:
    _compiled = None

END_TO_END = """
import time, warnings
warnings.simplefilter("ignore")
from qes.verify import verify_case
from qes.bethe import solve_spectrum
from qes.catalog import instantiate
form = instantiate("morse2", dict(a=1, b=1, d=1, alpha=1), n=20).form
t = time.perf_counter()
for _ in range(5):
    solve_spectrum(form)
t1 = (time.perf_counter() - t) / 5
t = time.perf_counter()
verify_case("coulomb8", dict(a=1, b=1, c=1, l=1, d=2), n=10)
t2 = time.perf_counter() - t
print(t1, t2)
"""


def _inputs(rng, deg, npts):
    c = (rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)).astype(np.complex128)
    z = (rng.standard_normal(npts) + 1j * rng.standard_normal(npts)).astype(np.complex128)
    roots = (rng.standard_normal(deg) + 1j * rng.standard_normal(deg)).astype(np.complex128)
    a = np.ascontiguousarray(c[:5])
    b = np.ascontiguousarray(c[:4])
    return c, z, roots, a, b


def kernel_table(repeat):
    rng = np.random.default_rng(0)
    rows = []
    for deg, npts in ((10, 2000), (40, 2000)):
        c, z, roots, a, b = _inputs(rng, deg, npts)
        calls = {
            f"horner deg={deg} pts={npts}": lambda m: m.horner(c, z, 2),
            f"root_sums n={deg} pts={npts}": lambda m: m.root_sums(roots, z, 1e-12),
            f"bae_system n={deg}": lambda m: m.bae_system(roots, a, b),
        }
        for name, fn in calls.items():
            py = min(timeit.repeat(lambda: fn(_kernels_py), number=20, repeat=repeat)) / 20
            cy = (min(timeit.repeat(lambda: fn(_compiled), number=20, repeat=repeat)) / 20
                  if _compiled is not None else float("nan"))
            rows.append((name, py, cy))
    return rows


def end_to_end():
    out = {}
    for label, pure in (("python", "1"), ("cython", "0")):
        env = dict(os.environ, QES_PURE_PYTHON=pure)
        res = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                             capture_output=True, text=True, check=True)
        out[label] = tuple(float(v) for v in res.stdout.split())
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _compiled is None:
        print("compiled extension not built; only the pure-Python backend is available")
    print(f"{'kernel':<30} {'python [us]':>12} {'cython [us]':>12} {'speedup':>8}")
    for name, py, cy in kernel_table(args.repeat):
        print(f"{name:<30} {py * 1e6:12.1f} {cy * 1e6:12.1f} {py / cy:8.1f}")
    e2e = end_to_end()
    print(f"{'end to end':<30} {'python [ms]':>12} {'cython [ms]':>12} {'speedup':>8}")
    for i, name in enumerate(("solve_spectrum morse2 n=20", "verify_case coulomb8 n=10")):
        py, cy = e2e["python"][i], e2e["cython"][i]
        print(f"{name:<30} {py * 1e3:12.1f} {cy * 1e3:12.1f} {py / cy:8.2f}")


if __name__ == "__main__":
    main()
