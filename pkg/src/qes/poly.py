"""Monic polynomials in product form and the root sums built from them.

Coefficients are stored in ascending order (``coeffs[k]`` multiplies z**k)
as complex doubles. Evaluators return real values when every input is real.
"""

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from . import kernels
from .errors import InvalidInputError, PoleError

REAL_TOL = 1e-9
POLE_TOL = 1e-12


def realify(values, tol=REAL_TOL):
    """Drop imaginary parts that are below ``tol`` in magnitude.

    Returns the input unchanged (complex) if any imaginary part is larger.
    """
    arr = np.asarray(values, dtype=np.complex128)
    if arr.size == 0 or np.all(np.abs(arr.imag) < tol):
        out = arr.real.copy()
        return out if out.ndim else float(out)
    return arr if arr.ndim else complex(arr)


def _is_real(*arrays):
    return all(not np.iscomplexobj(a) or np.all(np.asarray(a).imag == 0) for a in arrays)


def _shape_out(values, z, real):
    values = np.asarray(values)
    if real:
        values = values.real
    if np.ndim(z) == 0:
        return values[0].item()
    return values.reshape(np.shape(z))


@dataclass(frozen=True)
class MonicPoly:
    """Monic polynomial with optional cached roots.

    Parameters
    ----------
    coeffs : array_like
        Ascending coefficients; the last entry is 1.
    roots : array_like, optional
        Cached zeros; must expand back to ``coeffs``.
    """

    coeffs: np.ndarray
    roots: np.ndarray = field(default=None)

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if c.size == 0 or not np.all(np.isfinite(c)):
            raise InvalidInputError("polynomial coefficients must be finite and non-empty")
        if c[-1] != 1:
            raise InvalidInputError("leading coefficient must be exactly 1")
        object.__setattr__(self, "coeffs", c)
        if self.roots is not None:
            r = np.atleast_1d(np.asarray(self.roots, dtype=np.complex128))
            if r.size != c.size - 1:
                raise InvalidInputError("cached root count does not match degree")
            object.__setattr__(self, "roots", r)

    @property
    def degree(self):
        return self.coeffs.size - 1

    @classmethod
    def from_coeffs(cls, coeffs, lead_tol=1e-12):
        """Normalize arbitrary ascending coefficients to monic form."""
        c = np.trim_zeros(np.asarray(coeffs, dtype=np.complex128), "b")
        if c.size == 0 or abs(c[-1]) < lead_tol:
            raise InvalidInputError("leading coefficient too small to normalize")
        c = c / c[-1]
        c[-1] = 1.0
        return cls(c)

    def __call__(self, z, order=0):
        return eval_poly(self, z, order)

    def real_coeffs(self):
        return realify(self.coeffs)


def poly_from_roots(roots):
    """Expand prod(z - z_i) into a monic polynomial, caching the roots."""
    r = np.atleast_1d(np.asarray(roots, dtype=np.complex128))
    if not np.all(np.isfinite(r)):
        raise InvalidInputError("roots must be finite")
    if r.size == 0:
        return MonicPoly(np.ones(1), np.zeros(0))
    c = npoly.polyfromroots(r).astype(np.complex128)
    c[-1] = 1.0
    return MonicPoly(c, r)


def eval_poly(p, z, order=0):
    """p, p' or p'' at z (scalar or array) by Horner's rule."""
    if order not in (0, 1, 2):
        raise InvalidInputError("order must be 0, 1 or 2")
    vals = kernels.horner(p.coeffs, z, order)
    return _shape_out(vals, z, _is_real(p.coeffs, z))


class PolyFn:
    """General (not necessarily monic) polynomial with derivatives of any order.

    Used for probe functions and for L applied to a polynomial.
    """

    def __init__(self, coeffs):
        self.coeffs = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))

    @classmethod
    def monomial(cls, k):
        c = np.zeros(k + 1)
        c[k] = 1.0
        return cls(c)

    def __call__(self, z, order=0):
        c = self.coeffs
        if order > 0:
            c = npoly.polyder(c, order) if c.size > order else np.zeros(1, np.complex128)
        vals = kernels.horner(c, z, 0)
        return _shape_out(vals, z, _is_real(self.coeffs, z))


def eval_derivative(p, z, k):
    """k-th derivative of a MonicPoly at z for any k >= 0."""
    return PolyFn(p.coeffs)(z, k)


def wronskian_coeffs(p, q):
    """Ascending coefficients of the polynomial p q' - p' q."""
    pc, qc = p.coeffs, q.coeffs
    dq = npoly.polyder(qc) if qc.size > 1 else np.zeros(1)
    dp = npoly.polyder(pc) if pc.size > 1 else np.zeros(1)
    return npoly.polysub(npoly.polymul(pc, dq), npoly.polymul(dp, qc))


def wronskian2(p, q, z):
    """p q' - p' q at z."""
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    w = (kernels.horner(p.coeffs, zz, 0) * kernels.horner(q.coeffs, zz, 1)
         - kernels.horner(p.coeffs, zz, 1) * kernels.horner(q.coeffs, zz, 0))
    return _shape_out(w, z, _is_real(p.coeffs, q.coeffs, z))


def log_deriv_sums(roots, z, tol=POLE_TOL):
    """Return (s1, s2) with s1 = sum 1/(z - z_j), s2 = sum 1/(z - z_j)**2.

    Raises
    ------
    PoleError
        If z lies within ``tol`` of a root; ``index`` names the root.
    """
    r = np.atleast_1d(np.asarray(roots, dtype=np.complex128))
    s1, s2, ir, iz = kernels.root_sums(r, z, tol)
    if ir >= 0:
        loc = complex(np.atleast_1d(z)[iz])
        raise PoleError(f"z={loc} coincides with root {ir}", index=int(ir), location=loc)
    real = _is_real(roots, z)
    return _shape_out(s1, z, real), _shape_out(s2, z, real)
