"""First-order state-deleting SUSY partners built from a seed eigenstate.

Bare convention: A = sqrt(P4) (D - (ln phi_s)'), and B is normalized so that
B A = T1 + Lambda_s with T1 = P4 D^2 + P3 D - V1. Then A phi_o = phi2 and
B phi2 = (Lambda_s - E_o) phi_o exactly, with no square-root prefactors.
"""

import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from .errors import BranchError, InvalidInputError, PoleError, SingularWeightError
from .poly import POLE_TOL, MonicPoly, PolyFn, _is_real, wronskian_coeffs
from . import kernels

GAUGE_MAX = 700.0


def _arr(z):
    return np.atleast_1d(np.asarray(z, dtype=np.complex128))


def _finish(vals, z, real_inputs=True):
    vals = np.asarray(vals)
    if real_inputs:
        scale = np.maximum(np.abs(vals.real), 1.0)
        if np.all(np.abs(vals.imag) <= 1e-12 * scale):
            vals = vals.real
    if np.ndim(z) == 0:
        return vals.reshape(-1)[0].item()
    return vals.reshape(np.shape(z))


def _check_poles(roots, z, tol=POLE_TOL):
    r = _arr(roots) if len(np.atleast_1d(roots)) else np.zeros(0, np.complex128)
    if r.size == 0:
        return
    d = np.abs(z[:, None] - r[None, :])
    hit = d <= tol
    if hit.any():
        iz, ir = np.argwhere(hit)[0]
        raise PoleError(f"z={z[iz]} coincides with seed root {ir}", index=int(ir),
                        location=complex(z[iz]))


def _root_sums3(roots, z):
    """s1, s2, s3 = sum (z - z_j)**-k for k = 1, 2, 3."""
    r = _arr(roots) if len(np.atleast_1d(roots)) else np.zeros(0, np.complex128)
    s1, s2, ir, iz = kernels.root_sums(r, z, POLE_TOL)
    if ir >= 0:
        raise PoleError(f"z={z[iz]} coincides with seed root {ir}", index=int(ir),
                        location=complex(z[iz]))
    if r.size == 0:
        return s1, s2, np.zeros_like(z)
    s3 = (1.0 / (z[:, None] - r[None, :]) ** 3).sum(axis=1)
    return s1, s2, s3


def sqrt_P4(form, z, order=0, allow_complex=False):
    """sqrt(P4) and its first two derivatives (principal branch).

    Raises BranchError for P4 < 0 unless ``allow_complex``.
    """
    zz = _arr(z)
    p = kernels.horner(form.a, zz, 0)
    real = _is_real(form.a, z)
    if real and not allow_complex and np.any(p.real < 0):
        i = int(np.argmax(p.real < 0))
        raise BranchError(f"P4 < 0 at z={zz[i].real}; complex branch not enabled")
    r = np.sqrt(p)
    if order == 0:
        return r
    if np.any(p == 0):
        raise SingularWeightError("P4 vanishes at an evaluation point")
    p1 = kernels.horner(form.a, zz, 1)
    if order == 1:
        return p1 / (2 * r)
    p2 = kernels.horner(form.a, zz, 2)
    return p2 / (2 * r) - p1 * p1 / (4 * r ** 3)


class AFunction:
    """g = A_bare f as a callable g(z, order) for order 0, 1, 2.

    ``f`` must accept (z, order) with order up to 3 when g'' is requested.
    """

    def __init__(self, seed, form, f, allow_complex=False):
        self.seed = seed
        self.form = form
        self.f = f
        self.allow_complex = allow_complex

    def __call__(self, z, order=0):
        zz = _arr(z)
        s1, s2, s3 = _root_sums3(self.seed.roots, zz)
        f = [np.asarray(self.f(zz, k), dtype=np.complex128) for k in range(order + 2)]
        r = [sqrt_P4(self.form, zz, k, self.allow_complex) for k in range(order + 1)]
        u0 = f[1] - s1 * f[0]
        if order == 0:
            out = r[0] * u0
        else:
            u1 = f[2] - s1 * f[1] + s2 * f[0]
            if order == 1:
                out = r[1] * u0 + r[0] * u1
            else:
                u2 = f[3] - s1 * f[2] + 2 * s2 * f[1] - 2 * s3 * f[0]
                out = r[2] * u0 + 2 * r[1] * u1 + r[0] * u2
        return _finish(out, z, _is_real(z, self.seed.roots))


def apply_A_bare(seed, form, f, z, allow_complex=False):
    """sqrt(P4) (f' - s1_seed f) at z."""
    return AFunction(seed, form, f, allow_complex)(z, 0)


def partner_poly(seed, other, form, z, allow_complex=False):
    """phi2 = sqrt(P4) W(phi_s, phi_o) / phi_s at z."""
    zz = _arr(z)
    _check_poles(seed.roots, zz)
    W = kernels.horner(wronskian_coeffs(seed.poly, other.poly), zz, 0)
    ps = kernels.horner(seed.poly.coeffs, zz, 0)
    out = sqrt_P4(form, zz, 0, allow_complex) * W / ps
    return _finish(out, z, _is_real(z, seed.roots, other.roots))


def apply_B_bare(seed, other, form, f, z, allow_complex=False):
    """B_bare f in the Wronskian form.

    sqrt(P4) [f' + gap phi_s phi_o / (P4 W) f - (P4'/2P4) f - (W'/W) f + (phi_s'/phi_s) f]
    with gap = seed.energy - other.energy.

    Raises
    ------
    PoleError
        At zeros of W (node error), of phi_s or of P4.
    """
    zz = _arr(z)
    _check_poles(seed.roots, zz)
    gap = seed.energy - other.energy
    wc = wronskian_coeffs(seed.poly, other.poly)
    W = kernels.horner(wc, zz, 0)
    if np.any(np.abs(W) <= POLE_TOL * np.maximum(np.abs(kernels.horner(np.abs(wc), np.abs(zz), 0)), 1e-300)):
        i = int(np.argmin(np.abs(W)))
        raise PoleError(f"Wronskian node at z={zz[i]}", location=complex(zz[i]))
    dW = kernels.horner(wc, zz, 1)
    ps = kernels.horner(seed.poly.coeffs, zz, 0)
    dps = kernels.horner(seed.poly.coeffs, zz, 1)
    po = kernels.horner(other.poly.coeffs, zz, 0)
    P4 = kernels.horner(form.a, zz, 0)
    if np.any(P4 == 0):
        raise SingularWeightError("P4 vanishes at an evaluation point")
    dP4 = kernels.horner(form.a, zz, 1)
    f0 = np.asarray(f(zz, 0), dtype=np.complex128)
    f1 = np.asarray(f(zz, 1), dtype=np.complex128)
    coef = gap * ps * po / (P4 * W) - dP4 / (2 * P4) - dW / W + dps / ps
    out = sqrt_P4(form, zz, 0, allow_complex) * (f1 + coef * f0)
    return _finish(out, z, _is_real(z, seed.roots, other.roots, f0))


def apply_B_direct(seed, form, f, z, allow_complex=False):
    """B_bare f from the factorization B A = T1 + Lambda_s directly:

    sqrt(P4) f' + (P3 - P4'/2 + P4 s1_seed) / sqrt(P4) f.

    Equal to ``apply_B_bare`` by Abel's identity; used as a cross-check.
    """
    zz = _arr(z)
    s1, _, _ = _root_sums3(seed.roots, zz)
    r = sqrt_P4(form, zz, 0, allow_complex)
    P3 = kernels.horner(form.b, zz, 0)
    P4 = kernels.horner(form.a, zz, 0)
    dP4 = kernels.horner(form.a, zz, 1)
    f0 = np.asarray(f(zz, 0), dtype=np.complex128)
    f1 = np.asarray(f(zz, 1), dtype=np.complex128)
    out = r * f1 + (P3 - dP4 / 2 + P4 * s1) / r * f0
    return _finish(out, z, _is_real(z, seed.roots, f0))


def partner_ode_potential(seed, form, z):
    """V2 = V1 + (1/4)[2(P4'' - 2P3') + (2P3 - P4')P4'/P4 - 4P4' s1 + 8P4 s2].

    The s2 term enters as -8 P4 (ln phi_s)'' with (ln phi_s)'' = -s2.
    """
    zz = _arr(z)
    s1, s2, _ = _root_sums3(seed.roots, zz)
    P4 = kernels.horner(form.a, zz, 0)
    if np.any(P4 == 0):
        raise SingularWeightError("P4 vanishes at an evaluation point")
    d1 = kernels.horner(form.a, zz, 1)
    d2 = kernels.horner(form.a, zz, 2)
    P3 = kernels.horner(form.b, zz, 0)
    e1 = kernels.horner(form.b, zz, 1)
    V1 = kernels.horner(form.v1, zz, 0)
    out = V1 + 0.25 * (2 * (d2 - 2 * e1) + (2 * P3 - d1) * d1 / P4 - 4 * d1 * s1 + 8 * P4 * s2)
    return _finish(out, z, _is_real(z, seed.roots, form.a, form.b, form.v1))


def apply_T(form, f, z, V=None):
    """P4 f'' + P3 f' - V f with V = V1 unless given (array or callable)."""
    zz = _arr(z)
    Vz = kernels.horner(form.v1, zz, 0) if V is None else (V(zz) if callable(V) else V)
    out = (kernels.horner(form.a, zz, 0) * np.asarray(f(zz, 2))
           + kernels.horner(form.b, zz, 0) * np.asarray(f(zz, 1)) - Vz * np.asarray(f(zz, 0)))
    return _finish(out, z, _is_real(z))


@dataclass
class SusyPartner:
    """Seed/other pair with evaluators for the partner system.

    ``case`` may be None for pure ODE use; x-space evaluators then raise.
    """

    case: object
    seed: object
    other: object
    form: object
    allow_complex: bool = False
    v2_sign: float = 1.0
    branch_sign: float = 1.0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if abs(self.seed.energy - self.other.energy) == 0 and np.allclose(
                self.seed.poly.coeffs, self.other.poly.coeffs):
            raise InvalidInputError("seed and other must be distinct eigenstates")

    @property
    def gap(self):
        return self.seed.energy - self.other.energy

    @property
    def seed_pole_zs(self):
        return np.array(self.seed.roots)

    def phi2(self, z, order=0):
        if order == 0:
            return partner_poly(self.seed, self.other, self.form, z, self.allow_complex)
        return AFunction(self.seed, self.form, self._other_fn, self.allow_complex)(z, order)

    def _other_fn(self, z, order):
        return PolyFn(self.other.poly.coeffs)(z, order)

    def V2_z(self, z):
        out = partner_ode_potential(self.seed, self.form, z)
        if self.v2_sign != 1.0:
            # debug mutation: flip the correction term
            v1 = self.form.V1(z)
            out = v1 + self.v2_sign * (np.asarray(out) - v1)
        return out

    # -- x space ---------------------------------------------------------------

    def _case(self):
        if self.case is None:
            raise InvalidInputError("partner has no case attached")
        self.case._need_x()
        return self.case

    def dlnpsi_seed(self, x):
        """(ln psi_seed)'(x) = (s1(z) - K(z)) z'(x)."""
        c = self._case()
        z = c.z_of_x(x)
        s1, _, _ = _root_sums3(self.seed.roots, _arr(z))
        return _finish((s1 - c.gauge_K(np.asarray(z))) * c.dzdx(x), x, _is_real(self.seed.roots))

    def V2_x(self, x):
        """Partner Schrodinger potential (1-D operator) at x."""
        c = self._case()
        w = self.dlnpsi_seed(x)
        rho = c.weight_rho(x)
        lr = c.dlnrho_dx(x)
        out = (-c.V_x(x) + 2 * self.seed.energy / rho - 0.25 * lr * lr - lr * w
               + 2 * w * w + 0.5 * c.d2rho_over_rho(x))
        if self.v2_sign != 1.0:
            out = c.V_x(x) + self.v2_sign * (out - c.V_x(x))
        return out

    def V2_x_from_ode(self, x):
        """Independent route: V + (V2 - V1)(z) / rho."""
        c = self._case()
        z = c.z_of_x(x)
        return c.V_x(x) + (self.V2_z(z) - self.form.V1(z)) / c.weight_rho(x)

    def gauge(self, x):
        """exp(-G(z(x))) with an overflow mask (|G| > 700 -> 0, flagged)."""
        c = self._case()
        G = np.asarray(c.gauge_G(c.z_of_x(x)), dtype=float)
        bad = np.abs(G) > GAUGE_MAX
        val = np.exp(-np.where(bad, 0.0, G))
        val = np.where(bad, 0.0, val)
        return val, bad

    def wavefunctions(self, x):
        """(psi_seed, psi_other, psi2) at x.

        psi2 = s sqrt(rho) z' (W/phi_s)(z) exp(-G); the sign s makes
        s sqrt(rho) z' the analytic continuation of sqrt(P4) from the
        reference branch, so psi2 = phi2 exp(-G) there.
        """
        c = self._case()
        z = c.z_of_x(x)
        zz = _arr(z)
        _check_poles(self.seed.roots, zz)
        g, bad = self.gauge(x)
        if np.any(bad):
            warnings.warn("gauge exponent beyond 700; values set to zero", RuntimeWarning)
        ps = kernels.horner(self.seed.poly.coeffs, zz, 0)
        po = kernels.horner(self.other.poly.coeffs, zz, 0)
        W = kernels.horner(wronskian_coeffs(self.seed.poly, self.other.poly), zz, 0)
        lead = self.branch_sign * np.sqrt(_arr(c.weight_rho(x))) * _arr(c.dzdx(x))
        g = _arr(g)
        real = _is_real(self.seed.roots, self.other.roots)
        return WaveValues(_finish(ps * g, x, real), _finish(po * g, x, real),
                          _finish(lead * W / ps * g, x, real), bool(np.any(bad)))

    def seed_pole_xs(self, x_range=None, samples=4001):
        """x positions in ``x_range`` (default: the case grid, clipped to the
        physical domain) that map onto real seed roots.

        Every preimage is returned, so even maps such as z = x**2 give both
        signs and periodic maps give every period in range.
        """
        c = self._case()
        lo, hi = x_range or c.default_grid[:2]
        lo, hi = max(lo, c.x_domain[0]), min(hi, c.x_domain[1])
        zlo, zhi = c.z_domain
        xs = np.linspace(lo, hi, samples)
        with np.errstate(all="ignore"):
            zs = np.asarray(c.z_of_x(xs), dtype=float)
        out = []
        for r in np.atleast_1d(self.seed.roots):
            if abs(np.imag(r)) > 1e-9 or not zlo < np.real(r) < zhi:
                continue
            r = float(np.real(r))
            f = zs - r
            out.extend(xs[f == 0])
            for i in np.flatnonzero(np.isfinite(f[:-1]) & np.isfinite(f[1:])
                                    & (f[:-1] * f[1:] < 0)):
                out.append(brentq(lambda t: float(c.z_of_x(t)) - r, xs[i], xs[i + 1],
                                  xtol=1e-14, rtol=4 * np.finfo(float).eps))
        return sorted(set(float(x) for x in out))

class WaveValues(tuple):
    """(psi_seed, psi_other, psi2) with an ``overflow`` flag attribute."""

    def __new__(cls, a, b, c, overflow=False):
        obj = super().__new__(cls, (a, b, c))
        obj.overflow = overflow
        return obj


def _branch_sign(case):
    """Sign s with s sqrt(rho) z'(x) = +sqrt(P4) at a reference point in the
    upper part of the default grid."""
    if case is None or case.algebraic_only:
        return 1.0
    lo, hi, _ = case.default_grid
    dz = float(case.dzdx(lo + 0.75 * (hi - lo)))
    return -1.0 if dz < 0 else 1.0


def build_partner(case, solutions=None, seed_index=0, other_index=None, form=None,
                  allow_complex=False, v2_sign=1.0):
    """Pair a seed with another state.

    Parameters
    ----------
    case : CaseInstance or None
    solutions : list of BetheSolution, optional
        Spectrum; solved from ``form`` (default ``case.form``) when omitted.
    seed_index, other_index : int
        Positions in the energy-sorted spectrum. ``other_index`` defaults to
        the lowest state that is not the seed.
    """
    from .bethe import solve_spectrum
    form = form if form is not None else case.form
    sols = solutions if solutions is not None else solve_spectrum(form)
    m = len(sols)
    if m < 2:
        raise InvalidInputError("SUSY partner needs n >= 1 (at least two states)")
    if not 0 <= seed_index < m:
        raise InvalidInputError(f"seed index {seed_index} out of range 0..{m - 1}")
    if other_index is None:
        other_index = 1 if seed_index == 0 else 0
    if not 0 <= other_index < m or other_index == seed_index:
        raise InvalidInputError(f"other index {other_index} invalid")
    return SusyPartner(case, sols[seed_index], sols[other_index], form, allow_complex,
                       v2_sign, _branch_sign(case),
                       {"seed_index": seed_index, "other_index": other_index})


@dataclass
class RadialWrap:
    """Radial-form evaluators with h = r**(-(d-1)/2)."""

    partner: SusyPartner

    def __post_init__(self):
        if self.partner.case is None or self.partner.case.radial is None:
            raise InvalidInputError("case has no radial data")

    def _h(self, r):
        r = np.asarray(r, float)
        if np.any(r <= 0):
            raise InvalidInputError("r must be > 0")
        d = self.partner.case.radial.d_dim
        return r ** (-(d - 1) / 2.0)

    def shift(self, r):
        """V_S^(2) - V^(2) = -(d-1)(d-3)/(4r^2) + l(l+d-2)/r^2."""
        c = self.partner.case
        return -np.asarray(c.centrifugal_shift(r))

    def V_S(self, r):
        self._h(r)
        return self.partner.case.V_S(r)

    def V_S2(self, r):
        self._h(r)
        return self.partner.V2_x(r) + self.shift(r)

    def wavefunctions(self, r):
        h = self._h(r)
        a, b, c = self.partner.wavefunctions(r)
        return WaveValues(h * a, h * b, h * c)


def radial_wrap(partner):
    return RadialWrap(partner)
