# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: Horner evaluation, root sums, and the Bethe system.

Signatures and return conventions match ``qes._kernels_py`` exactly; the
selector in ``qes.kernels`` picks whichever is importable.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()

ctypedef double complex cplx


cdef inline double cabs2(cplx w) nogil:
    return w.real * w.real + w.imag * w.imag


def horner(const cplx[::1] c, const cplx[::1] z, int order):
    """Value and first two derivatives of sum c[k] z**k at each z."""
    cdef Py_ssize_t m = z.shape[0]
    cdef Py_ssize_t deg = c.shape[0] - 1
    cdef Py_ssize_t i, k
    cdef cplx p0, p1, p2, zi
    out = np.empty(m, dtype=np.complex128)
    cdef cplx[::1] o = out
    for i in range(m):
        zi = z[i]
        p0 = 0
        p1 = 0
        p2 = 0
        for k in range(deg, -1, -1):
            p2 = p2 * zi + 2.0 * p1
            p1 = p1 * zi + p0
            p0 = p0 * zi + c[k]
        if order == 0:
            o[i] = p0
        elif order == 1:
            o[i] = p1
        else:
            o[i] = p2
    return out


def root_sums(const cplx[::1] roots, const cplx[::1] z, double tol):
    """Return (s1, s2, iroot, iz); iroot >= 0 flags a collision."""
    cdef Py_ssize_t m = z.shape[0]
    cdef Py_ssize_t n = roots.shape[0]
    cdef Py_ssize_t i, j
    cdef cplx d, inv, a1, a2
    cdef double tol2 = tol * tol
    s1 = np.zeros(m, dtype=np.complex128)
    s2 = np.zeros(m, dtype=np.complex128)
    cdef cplx[::1] o1 = s1
    cdef cplx[::1] o2 = s2
    for i in range(m):
        a1 = 0
        a2 = 0
        for j in range(n):
            d = z[i] - roots[j]
            if cabs2(d) <= tol2:
                return s1, s2, j, i
            inv = 1.0 / d
            a1 = a1 + inv
            a2 = a2 + inv * inv
        o1[i] = a1
        o2[i] = a2
    return s1, s2, -1, -1


def bae_system(const cplx[::1] roots, const cplx[::1] a, const cplx[::1] b):
    """Residual vector and Jacobian of the Bethe equations.

    F_i = sum_{j != i} 2/(z_i - z_j) + P3(z_i)/P4(z_i), with a and b the
    ascending coefficients of P4 and P3.
    """
    cdef Py_ssize_t n = roots.shape[0]
    cdef Py_ssize_t i, j, k
    cdef cplx zi, d, q, p4, dp4, p3, dp3
    F = np.zeros(n, dtype=np.complex128)
    J = np.zeros((n, n), dtype=np.complex128)
    cdef cplx[::1] f = F
    cdef cplx[:, ::1] jac = J
    for i in range(n):
        zi = roots[i]
        p4 = 0
        dp4 = 0
        for k in range(a.shape[0] - 1, -1, -1):
            dp4 = dp4 * zi + p4
            p4 = p4 * zi + a[k]
        p3 = 0
        dp3 = 0
        for k in range(b.shape[0] - 1, -1, -1):
            dp3 = dp3 * zi + p3
            p3 = p3 * zi + b[k]
        f[i] = p3 / p4
        jac[i, i] = (dp3 * p4 - p3 * dp4) / (p4 * p4)
        for j in range(n):
            if j == i:
                continue
            d = zi - roots[j]
            q = 1.0 / d
            f[i] = f[i] + 2.0 * q
            jac[i, i] = jac[i, i] - 2.0 * q * q
            jac[i, j] = 2.0 * q * q
    return F, J
