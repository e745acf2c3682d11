"""Second-order ODE with polynomial coefficients,

    P4(z) phi'' + P3(z) phi' + (E - V1(z)) phi = 0,

and the coefficient constraints that make it quasi-exactly solvable.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidInputError
from .poly import MonicPoly, _is_real, _shape_out


def _pad(values, size, name):
    arr = np.asarray(values, dtype=np.complex128).ravel()
    if arr.size > size:
        if np.any(arr[size:] != 0):
            raise InvalidInputError(f"{name} has degree above {size - 1}")
        arr = arr[:size]
    out = np.zeros(size, dtype=np.complex128)
    out[: arr.size] = arr
    return out


@dataclass(frozen=True)
class OdeStandardForm:
    """Coefficients of P4, P3 and V1, all in ascending order.

    ``a[k]`` multiplies z**k in P4 (k <= 4), ``b[k]`` in P3 (k <= 3) and
    ``v1[k]`` in V1 (k <= 2). ``n`` is the degree of the polynomial
    solutions sought.
    """

    a: np.ndarray
    b: np.ndarray
    v1: np.ndarray
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", _pad(self.a, 5, "P4"))
        object.__setattr__(self, "b", _pad(self.b, 4, "P3"))
        object.__setattr__(self, "v1", _pad(self.v1, 3, "V1"))
        if not np.all(np.isfinite(np.concatenate([self.a, self.b, self.v1]))):
            raise InvalidInputError("ODE coefficients must be finite")
        if not np.any(self.a != 0):
            raise InvalidInputError("P4 must not vanish identically")
        if int(self.n) != self.n or self.n < 0:
            raise InvalidInputError("n must be a non-negative integer")
        object.__setattr__(self, "n", int(self.n))

    def _eval(self, c, z, order):
        return _shape_out(kernels.horner(c, z, order), z, _is_real(c, z))

    def P4(self, z, order=0):
        return self._eval(self.a, z, order)

    def P3(self, z, order=0):
        return self._eval(self.b, z, order)

    def V1(self, z, order=0):
        return self._eval(self.v1, z, order)

    def with_n(self, n):
        return OdeStandardForm(self.a, self.b, self.v1, n)

    def perturbed(self, which, k, delta):
        """Copy with coefficient ``which[k]`` shifted by ``delta`` (relative
        to its magnitude when nonzero). ``which`` is 'a', 'b' or 'v1'."""
        arrs = {"a": self.a.copy(), "b": self.b.copy(), "v1": self.v1.copy()}
        c = arrs[which]
        c[k] = c[k] + delta * (abs(c[k]) if c[k] != 0 else 1.0)
        return OdeStandardForm(arrs["a"], arrs["b"], arrs["v1"], self.n)

    def apply_L(self, coeffs):
        """Coefficients of L p = P4 p'' + P3 p' - V1 p for ascending ``coeffs``.

        The result has length len(coeffs) + 2.
        """
        c = np.asarray(coeffs, dtype=np.complex128)
        m = c.size
        out = np.zeros(m + 2, dtype=np.complex128)
        for k in range(m):
            if c[k] == 0:
                continue
            for i in range(5):
                if k >= 2 and self.a[i] != 0:
                    out[k - 2 + i] += c[k] * k * (k - 1) * self.a[i]
            for i in range(4):
                if k >= 1 and self.b[i] != 0:
                    out[k - 1 + i] += c[k] * k * self.b[i]
            for i in range(3):
                out[k + i] -= c[k] * self.v1[i]
        return out

    def as_dict(self):
        from .poly import realify
        return {"a": _jsonable(realify(self.a)), "b": _jsonable(realify(self.b)),
                "v1": _jsonable(realify(self.v1)), "n": self.n}


def _jsonable(arr):
    arr = np.asarray(arr)
    if np.iscomplexobj(arr):
        return [[float(v.real), float(v.imag)] for v in arr]
    return [float(v) for v in arr]


def c_constraints(form, roots):
    """P2 coefficients (c2, c1, c0) forced by a root set.

    Raises
    ------
    InvalidInputError
        If the number of roots differs from ``form.n``.
    """
    r = np.atleast_1d(np.asarray(roots, dtype=np.complex128))
    n = form.n
    if r.size != n:
        raise InvalidInputError(f"expected {n} roots, got {r.size}")
    a, b = form.a, form.b
    s1 = r.sum()
    s2 = (r * r).sum()
    pair = (s1 * s1 - s2) / 2.0
    c2 = -n * (n - 1) * a[4] - n * b[3]
    c1 = -(2 * (n - 1) * a[4] + b[3]) * s1 - n * (n - 1) * a[3] - n * b[2]
    c0 = (-(2 * (n - 1) * a[4] + b[3]) * s2 - 2 * a[4] * pair
          - (2 * (n - 1) * a[3] + b[2]) * s1 - n * (n - 1) * a[2] - n * b[1])
    if n == 0:
        c2 = c1 = c0 = 0.0
    vals = [complex(c2), complex(c1), complex(c0)]
    if _is_real(r, a, b):
        vals = [v.real for v in vals]
    return tuple(vals)


def ode_residual(form, E, p, z):
    """Relative residual of P4 p'' + P3 p' + (E - V1) p at z."""
    t2 = form.P4(z) * p(z, 2)
    t1 = form.P3(z) * p(z, 1)
    t0 = (E - form.V1(z)) * p(z, 0)
    scale = np.maximum(1.0, np.abs(t2) + np.abs(t1) + np.abs(t0))
    return np.abs(t2 + t1 + t0) / scale


@dataclass(frozen=True)
class ConsistencyReport:
    """Per-coefficient discrepancies of the QES constraints."""

    d2: float
    d1: float
    d0: float
    tol: float

    @property
    def max_discrepancy(self):
        return max(self.d2, self.d1, self.d0)

    @property
    def passed(self):
        return self.max_discrepancy < self.tol

    @property
    def failed(self):
        return [name for name, d in (("c2", self.d2), ("c1", self.d1), ("c0", self.d0))
                if not d < self.tol]


def qes_consistency_check(form, roots, E, tol=1e-8):
    """Compare (c2, c1, c0) from the roots with -v1[2], -v1[1], E - v1[0].

    Discrepancies are relative to max(1, |target|).
    """
    c2, c1, c0 = c_constraints(form, roots)
    targets = (-form.v1[2], -form.v1[1], E - form.v1[0])
    ds = [abs(c - t) / max(1.0, abs(t)) for c, t in zip((c2, c1, c0), targets)]
    return ConsistencyReport(float(ds[0]), float(ds[1]), float(ds[2]), tol)


__all__ = ["OdeStandardForm", "c_constraints", "ode_residual", "qes_consistency_check",
           "ConsistencyReport", "MonicPoly"]
