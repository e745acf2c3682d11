"""Pure-Python/numpy versions of the compiled kernels.

Used when the extension is not built, or when ``QES_PURE_PYTHON=1``.
"""

import numpy as np


def horner(c, z, order):
    """Value and first two derivatives of sum c[k] z**k at each z."""
    c = np.asarray(c, dtype=np.complex128)
    z = np.asarray(z, dtype=np.complex128)
    p0 = np.zeros_like(z)
    p1 = np.zeros_like(z)
    p2 = np.zeros_like(z)
    for ck in c[::-1]:
        p2 = p2 * z + 2.0 * p1
        p1 = p1 * z + p0
        p0 = p0 * z + ck
    return (p0, p1, p2)[order]


def root_sums(roots, z, tol):
    """Return (s1, s2, iroot, iz); iroot >= 0 flags a collision."""
    roots = np.asarray(roots, dtype=np.complex128)
    z = np.asarray(z, dtype=np.complex128)
    if roots.size == 0:
        return np.zeros_like(z), np.zeros_like(z), -1, -1
    d = z[:, None] - roots[None, :]
    hit = np.abs(d) <= tol
    if hit.any():
        iz, ir = np.argwhere(hit)[0]
        return np.zeros_like(z), np.zeros_like(z), int(ir), int(iz)
    inv = 1.0 / d
    return inv.sum(axis=1), (inv * inv).sum(axis=1), -1, -1


def bae_system(roots, a, b):
    """Residual vector and Jacobian of the Bethe equations."""
    roots = np.asarray(roots, dtype=np.complex128)
    n = roots.size
    p4 = horner(a, roots, 0)
    dp4 = horner(a, roots, 1)
    p3 = horner(b, roots, 0)
    dp3 = horner(b, roots, 1)
    F = p3 / p4
    J = np.diag((dp3 * p4 - p3 * dp4) / (p4 * p4))
    if n > 1:
        d = roots[:, None] - roots[None, :]
        np.fill_diagonal(d, 1.0)
        q = 1.0 / d
        np.fill_diagonal(q, 0.0)
        F = F + 2.0 * q.sum(axis=1)
        q2 = 2.0 * q * q
        J = J + q2 - np.diag(q2.sum(axis=1))
    return F, J
