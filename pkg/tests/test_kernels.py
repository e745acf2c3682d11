import json
import os
import subprocess
import sys

import numpy as np
import pytest

from qes import _kernels_py, kernels

try:
    from qes import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


def _data(seed, deg=7, npts=64):
    rng = np.random.default_rng(seed)
    c = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
    z = rng.standard_normal(npts) + 1j * rng.standard_normal(npts)
    roots = rng.standard_normal(deg) + 1j * rng.standard_normal(deg)
    return c, z, roots, c[:5].copy(), c[:4].copy()


@needs_compiled
@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("order", [0, 1, 2])
def test_horner_parity(seed, order):
    c, z, *_ = _data(seed)
    np.testing.assert_allclose(compiled.horner(c, z, order), _kernels_py.horner(c, z, order),
                               rtol=1e-13, atol=1e-13)


@needs_compiled
@pytest.mark.parametrize("seed", range(5))
def test_root_sums_parity(seed):
    _, z, roots, *_ = _data(seed)
    a = compiled.root_sums(roots, z, 1e-12)
    b = _kernels_py.root_sums(roots, z, 1e-12)
    for x, y in zip(a[:2], b[:2]):
        np.testing.assert_allclose(x, y, rtol=1e-12)
    assert tuple(a[2:]) == tuple(b[2:]) == (-1, -1)


@needs_compiled
def test_root_sums_collision_parity():
    roots = np.array([0.5 + 0j, 1.0 + 0j])
    z = np.array([0.0 + 0j, 1.0 + 0j, 2.0 + 0j])
    assert compiled.root_sums(roots, z, 1e-12)[2:] == _kernels_py.root_sums(roots, z, 1e-12)[2:]
    assert _kernels_py.root_sums(roots, z, 1e-12)[2:] == (1, 1)


@needs_compiled
@pytest.mark.parametrize("seed", range(5))
def test_bae_system_parity(seed):
    _, _, roots, a, b = _data(seed)
    Fc, Jc = compiled.bae_system(roots, a, b)
    Fp, Jp = _kernels_py.bae_system(roots, a, b)
    np.testing.assert_allclose(Fc, Fp, rtol=1e-11)
    np.testing.assert_allclose(Jc, Jp, rtol=1e-11)


def test_bae_jacobian_matches_finite_difference():
    _, _, roots, a, b = _data(11, deg=4)
    F, J = kernels.bae_system(roots, a, b)
    h = 1e-7
    for k in range(roots.size):
        dr = np.zeros_like(roots)
        dr[k] = h
        fd = (kernels.bae_system(roots + dr, a, b)[0] - kernels.bae_system(roots - dr, a, b)[0])
        np.testing.assert_allclose(J[:, k], fd / (2 * h), rtol=1e-5, atol=1e-6)


def test_fallback_selected_by_environment():
    code = "import qes.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, QES_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    env["QES_PURE_PYTHON"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == ("cython" if compiled is not None else "python")


def test_spectrum_identical_across_backends():
    code = ("import json; from qes.catalog import instantiate; from qes.bethe import solve_spectrum;"
            "s = solve_spectrum(instantiate('coulomb8', dict(a=1,b=1,c=1,l=1,d=2), 10).form);"
            "print(json.dumps([float(x.energy) for x in s]))")
    res = {}
    for flag in ("1", "0"):
        env = dict(os.environ, QES_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True)
        res[flag] = np.array(json.loads(out.stdout))
    np.testing.assert_allclose(res["0"], res["1"], rtol=1e-12)
