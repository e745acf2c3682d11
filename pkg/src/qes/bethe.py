"""Polynomial eigenstates of an ODE standard form.

The operator L = P4 D^2 + P3 D - V1 is written as an (n+1)x(n+1) matrix on
{1, z, ..., z^n}; its eigenvectors are the polynomial solutions and
E = -eigenvalue. Bethe roots come from the companion matrix and are then
polished by damped Newton on the Bethe equations.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from . import kernels
from .errors import (CollisionError, DegenerateSpectrumError, DegreeDropError,
                     NotQESError, SingularWeightError)
from .odeform import ode_residual
from .poly import MonicPoly, poly_from_roots, realify

OVERFLOW_TOL = 1e-10
COND_MAX = 1e12
LEAD_TOL = 1e-12
BAE_TOL = 1e-12
COLLIDE_TOL = 1e-10
STALL_TOL = 1e-9
DEFAULT_SAMPLES = np.linspace(-2.0, 2.0, 50)


@dataclass(frozen=True)
class BetheSolution:
    """One polynomial eigenstate."""

    n: int
    energy: complex
    poly: MonicPoly
    roots: np.ndarray
    bae_residual: float
    ode_residual_max: float
    is_real: bool
    refine_warning: bool = field(default=False)

    @property
    def real_energy(self):
        return realify(self.energy)

    def as_dict(self):
        e = realify(self.energy)
        r = realify(self.roots)
        return {
            "energy": _json_scalar(e),
            "roots": [_json_scalar(v) for v in np.atleast_1d(r)],
            "coeffs": [_json_scalar(v) for v in np.atleast_1d(realify(self.poly.coeffs))],
            "bae_residual": float(self.bae_residual),
            "ode_residual_max": float(self.ode_residual_max),
            "is_real": bool(self.is_real),
        }


def _json_scalar(v):
    if isinstance(v, complex) or np.iscomplexobj(v):
        v = complex(v)
        return [v.real, v.imag]
    return float(v)


def algebraize(form):
    """Matrix of L on the monomial basis of degree <= n.

    Raises
    ------
    NotQESError
        If L maps z^k outside the space (relative overflow > 1e-10).
    """
    n = form.n
    M = np.zeros((n + 1, n + 1), dtype=np.complex128)
    overflow = 0.0
    scale = 0.0
    for k in range(n + 1):
        e = np.zeros(k + 1)
        e[k] = 1.0
        col = form.apply_L(e)
        scale = max(scale, np.abs(col).max())
        m = min(col.size, n + 1)
        M[:m, k] = col[:m]
        if col.size > n + 1:
            overflow = max(overflow, np.abs(col[n + 1:]).max())
    if overflow > OVERFLOW_TOL * max(scale, 1.0):
        raise NotQESError(
            f"degree-{n} polynomials are not invariant (overflow {overflow:.3e})")
    return M


def bae_residual(form, roots):
    """Max over i of |sum_{j!=i} 2/(z_i-z_j) + P3(z_i)/P4(z_i)|."""
    r = np.atleast_1d(np.asarray(roots, dtype=np.complex128))
    if r.size == 0:
        return 0.0
    p4 = kernels.horner(form.a, r, 0)
    mag = kernels.horner(np.abs(form.a), np.abs(r), 0).real
    bad = np.abs(p4) <= 1e-12 * np.maximum(mag, 1e-300)
    if bad.any():
        i = int(np.argmax(bad))
        raise SingularWeightError(f"P4 vanishes at root {i} (z={r[i]})", index=i,
                                  location=complex(r[i]))
    F, _ = kernels.bae_system(r, form.a, form.b)
    return float(np.abs(F).max())


def _min_separation(r):
    if r.size < 2:
        return np.inf
    d = np.abs(r[:, None] - r[None, :])
    np.fill_diagonal(d, np.inf)
    return d.min()


def refine_bae(form, roots, tol=BAE_TOL, maxit=50, full_output=False):
    """Damped Newton on the Bethe equations.

    Returns the refined roots, or the input roots with a warning when the
    residual grows for 5 consecutive steps. With ``full_output`` a tuple
    (roots, residual, iterations, diverged) is returned.

    Raises
    ------
    CollisionError
        If two roots come closer than 1e-10.
    """
    r0 = np.atleast_1d(np.asarray(roots, dtype=np.complex128)).copy()
    r = r0.copy()
    if r.size == 0:
        return (r, 0.0, 0, False) if full_output else r
    F, J = kernels.bae_system(r, form.a, form.b)
    res = np.abs(F).max()
    grow = 0
    it = 0
    diverged = False
    while res >= tol and it < maxit:
        it += 1
        try:
            step = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(J, -F, rcond=None)[0]
        lam = 1.0
        improved = False
        for _ in range(30):
            trial = r + lam * step
            Ft, Jt = kernels.bae_system(trial, form.a, form.b)
            rt = np.abs(Ft).max()
            if np.isfinite(rt) and rt < res:
                improved = True
                break
            lam *= 0.5
        if not improved:
            if res < STALL_TOL:
                break  # roundoff plateau
            trial = r + step
            Ft, Jt = kernels.bae_system(trial, form.a, form.b)
            rt = np.abs(Ft).max()
            grow += 1
        else:
            grow = 0
        if _min_separation(trial) < COLLIDE_TOL:
            raise CollisionError("Bethe roots collided during refinement")
        r, F, J = trial, Ft, Jt
        res = rt if np.isfinite(rt) else np.inf
        if grow >= 5:
            warnings.warn("BAE refinement diverged; returning input roots", RuntimeWarning)
            diverged = True
            r = r0
            res = np.abs(kernels.bae_system(r, form.a, form.b)[0]).max()
            break
    if full_output:
        return r, float(res), it, diverged
    return r


def _polish(coeffs, roots):
    p = kernels.horner(coeffs, roots, 0)
    dp = kernels.horner(coeffs, roots, 1)
    ok = np.abs(dp) > 0
    out = roots.copy()
    out[ok] = roots[ok] - p[ok] / dp[ok]
    return out


def solve_spectrum(form, z_samples=None):
    """All n+1 polynomial eigenstates sorted by Re(E) ascending.

    Raises
    ------
    NotQESError, DegenerateSpectrumError, DegreeDropError
    """
    M = algebraize(form)
    n = form.n
    lam, vecs = np.linalg.eig(M)
    norms = np.linalg.norm(vecs, axis=0)
    vecs = vecs / norms
    if n > 0 and np.linalg.cond(vecs) > COND_MAX:
        raise DegenerateSpectrumError("eigenvector matrix is ill-conditioned")
    zs = DEFAULT_SAMPLES if z_samples is None else np.asarray(z_samples)
    out = []
    for idx in range(n + 1):
        v = vecs[:, idx]
        if abs(v[n]) < LEAD_TOL:
            raise DegreeDropError(
                f"eigenvector {idx} has vanishing z^{n} coefficient (degree drop)")
        c = v / v[n]
        c[n] = 1.0
        E = -lam[idx]
        if n == 0:
            roots = np.zeros(0, dtype=np.complex128)
        else:
            roots = _polish(c, npoly.polyroots(c).astype(np.complex128))
        warn = False
        if n > 0:
            roots, _, _, warn = refine_bae(form, roots, full_output=True)
        roots = np.asarray(realify(roots)) if np.all(np.abs(np.imag(roots)) < 1e-9) else roots
        poly = poly_from_roots(roots)
        res = bae_residual(form, roots)
        Er = realify(E)
        odr = float(np.max(ode_residual(form, Er, poly, zs)))
        is_real = bool(abs(np.imag(E)) < 1e-9 and np.all(np.abs(np.imag(roots)) < 1e-9))
        out.append(BetheSolution(n, Er, poly, np.atleast_1d(roots), res, odr, is_real, warn))
    out.sort(key=lambda s: (np.real(s.energy), np.imag(s.energy)))
    return out
