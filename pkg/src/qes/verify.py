"""Independent numerical verification of eigenstates and SUSY partners.

Every check records its own tolerance, the worst residual and where it
occurred. A check passes iff ``max_residual < tol``. Tolerances can be
loosened (never tightened) with the environment variable ``QES_TOL``, a
scale factor >= 1.
"""

import json
import math
import os
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import catalog
from .bethe import solve_spectrum
from .errors import InvalidInputError, PoleError, QESError
from .odeform import qes_consistency_check
from .poly import PolyFn, wronskian_coeffs
from .susy import (AFunction, apply_A_bare, apply_B_bare, apply_B_direct, apply_T,
                   build_partner, partner_poly, radial_wrap, sqrt_P4)
from . import kernels

TOL_ENV = "QES_TOL"
FD_STEP = 1e-4

TOLERANCES = {
    "bae": 1e-8,
    "ode": 1e-8,
    "consistency": 1e-8,
    "annihilation": 1e-11,
    "mapping": 1e-11,
    "reverse_mapping": 1e-8,
    "b_forms": 1e-8,
    "factorization": 1e-8,
    "intertwining": 1e-7,
    "partner_ode": 1e-8,
    "partner_ode_state": 1e-7,
    "v2_routes": 1e-9,
    # 1e-6 holds for nodeless states, but at h = 1e-4 evaluation roundoff
    # near nodes of psi is amplified by 1/h**2 to ~1e-5
    "fd_original": 1e-4,
    "fd_partner": 1e-4,
    "oracle_spectrum": 1e-10,
    "oracle_field": 1e-9,
    "new_poles": 1.0,
}


def tol_scale(environ=None):
    """Tolerance scale factor from ``QES_TOL`` (default 1)."""
    env = os.environ if environ is None else environ
    raw = env.get(TOL_ENV, "")
    if raw.strip() == "":
        return 1.0
    try:
        s = float(raw)
    except ValueError:
        raise InvalidInputError(f"{TOL_ENV} must be a number, got {raw!r}") from None
    if not math.isfinite(s) or s < 1.0:
        raise InvalidInputError(f"{TOL_ENV} must be a finite scale factor >= 1, got {raw!r}")
    return s


def _jloc(v):
    if v is None:
        return None
    v = complex(v)
    return v.real if v.imag == 0 else [v.real, v.imag]


@dataclass
class Check:
    """One verification entry."""

    name: str
    max_residual: float
    tol: float
    worst_at: object = None

    @property
    def passed(self):
        return bool(np.isfinite(self.max_residual) and self.max_residual < self.tol)

    def as_dict(self):
        r = float(self.max_residual)
        return {"name": self.name, "max_residual": r if math.isfinite(r) else None,
                "tol": self.tol, "pass": self.passed, "worst_at": _jloc(self.worst_at)}


@dataclass
class VerificationReport:
    case: str
    n: int
    params: dict
    checks: list = field(default_factory=list)
    new_poles: list = field(default_factory=list)
    shared_poles: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failed(self):
        return [c for c in self.checks if not c.passed]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self):
        return {"case": self.case, "n": self.n,
                "params": {k: float(v) for k, v in self.params.items()},
                "checks": [c.as_dict() for c in self.checks],
                "new_poles": [float(x) for x in self.new_poles]}

    def to_json(self, **kw):
        return json.dumps(self.as_dict(), **kw)


def _check(name, err, scale, where, kind, s):
    """Check from pointwise errors ``err`` normalized by ``scale``."""
    err = np.abs(np.asarray(err, dtype=np.complex128)).ravel()
    if err.size == 0:
        return Check(name, math.nan, TOLERANCES[kind] * s)
    rel = err / scale
    i = int(np.nanargmax(rel)) if np.any(np.isfinite(rel)) else 0
    val = float(rel[i]) if np.all(np.isfinite(rel)) else math.inf
    return Check(name, val, TOLERANCES[kind] * s, np.asarray(where).ravel()[i])


# -- z sampling -----------------------------------------------------------------

def sample_z(partner, count=50, grid=None):
    """``count`` interior z points on the case grid that avoid roots of both
    polynomials, zeros of P4 and W, and (in real mode) negative P4."""
    case = partner.case
    if case is None:
        zs = np.linspace(-2.0, 2.0, count + 2)[1:-1]
    else:
        lo, hi, _ = grid or case.default_grid
        xs = np.linspace(lo, hi, count + 2)[1:-1]
        zs = xs if case.algebraic_only else np.asarray(case.z_of_x(xs), float)
    zc = zs.astype(np.complex128)
    roots = np.concatenate([np.atleast_1d(partner.seed.roots), np.atleast_1d(partner.other.roots)])
    ok = np.isfinite(zs)
    if roots.size:
        ok &= np.min(np.abs(zc[:, None] - roots[None, :]), axis=1) > 1e-6
    p4 = kernels.horner(partner.form.a, zc, 0)
    p4s = kernels.horner(np.abs(partner.form.a), np.abs(zc), 0).real
    ok &= np.abs(p4) > 1e-10 * np.maximum(p4s, 1e-300)
    if not partner.allow_complex:
        ok &= p4.real > 0
    wc = wronskian_coeffs(partner.seed.poly, partner.other.poly)
    W = kernels.horner(wc, zc, 0)
    ok &= np.abs(W) > 1e-10 * np.maximum(kernels.horner(np.abs(wc), np.abs(zc), 0).real, 1e-300)
    return zs[ok]


# -- identity suite ---------------------------------------------------------------

def identity_checks(partner, zs=None, zs_probe=None, prefix="", s=None):
    """Supercharge identities for one seed/other pair.

    annihilation   A phi_s = 0
    mapping        A phi_o = phi2
    reverse        B phi2 = (E_s - E_o) phi_o
    b_forms        Wronskian and direct forms of B agree
    factorization  B A f = (T1 + E_s) f on f in {1, z, z^2, z^3}
    intertwining   A (T1 + E_s) f = (T2 + E_s) A f on the same probes
    partner_ode    P4 phi2'' + P3 phi2' + (E_o - V2) phi2 = 0
    """
    s = tol_scale() if s is None else s
    seed, other, form = partner.seed, partner.other, partner.form
    ac = partner.allow_complex
    zs = sample_z(partner, 50) if zs is None else np.asarray(zs)
    zp = sample_z(partner, 20) if zs_probe is None else np.asarray(zs_probe)
    fs, fo = PolyFn(seed.poly.coeffs), PolyFn(other.poly.coeffs)
    out = []

    rp = np.abs(sqrt_P4(form, zs, 0, ac))
    a_seed = apply_A_bare(seed, form, fs, zs, ac)
    scale = max(1.0, float(np.max(rp * np.abs(fs(zs, 1)))))
    out.append(_check(prefix + "annihilation", a_seed, scale, zs, "annihilation", s))

    phi2 = partner_poly(seed, other, form, zs, ac)
    a_other = apply_A_bare(seed, form, fo, zs, ac)
    out.append(_check(prefix + "mapping", np.asarray(a_other) - phi2,
                      max(1.0, float(np.max(np.abs(phi2)))), zs, "mapping", s))

    g = AFunction(seed, form, fo, ac)
    b_phi2 = apply_B_bare(seed, other, form, g, zs, ac)
    target = partner.gap * np.asarray(fo(zs))
    out.append(_check(prefix + "reverse_mapping", np.asarray(b_phi2) - target,
                      max(float(np.max(np.abs(target))), 1e-300), zs, "reverse_mapping", s))
    b_dir = apply_B_direct(seed, form, g, zs, ac)
    out.append(_check(prefix + "b_forms", np.asarray(b_phi2) - b_dir,
                      max(float(np.max(np.abs(b_dir))), 1e-300), zs, "b_forms", s))

    Es = seed.energy
    fac_err, fac_scale, int_err, int_scale = [], 0.0, [], 0.0
    V2 = partner.V2_z(zp)
    for k in range(4):
        f = PolyFn.monomial(k)
        Af = AFunction(seed, form, f, ac)
        lhs = np.asarray(apply_B_bare(seed, other, form, Af, zp, ac))
        rhs = np.asarray(apply_T(form, f, zp)) + Es * np.asarray(f(zp))
        fac_err.append(lhs - rhs)
        fac_scale = max(fac_scale, float(np.max(np.abs(rhs))))
        e = np.zeros(k + 1)
        e[k] = 1.0
        c = form.apply_L(e)
        c[: k + 1] += Es * e
        lhs_i = np.asarray(AFunction(seed, form, PolyFn(c), ac)(zp, 0))
        rhs_i = np.asarray(apply_T(form, Af, zp, V=np.asarray(V2))) + Es * np.asarray(Af(zp, 0))
        int_err.append(lhs_i - rhs_i)
        int_scale = max(int_scale, float(np.max(np.abs(rhs_i))), float(np.max(np.abs(lhs_i))))
    zp4 = np.tile(zp, 4)
    out.append(_check(prefix + "factorization", np.concatenate(fac_err), max(fac_scale, 1e-300),
                      zp4, "factorization", s))
    out.append(_check(prefix + "intertwining", np.concatenate(int_err), max(int_scale, 1e-300),
                      zp4, "intertwining", s))
    out.append(partner_ode_check(partner, zs, prefix + "partner_ode", "partner_ode", s))
    return out


def partner_ode_check(partner, zs, name="partner_ode", kind="partner_ode", s=None):
    """Relative residual of the partner ODE for phi2 with energy E_o."""
    s = tol_scale() if s is None else s
    form = partner.form
    g0 = np.asarray(partner.phi2(zs, 0))
    g1 = np.asarray(partner.phi2(zs, 1))
    g2 = np.asarray(partner.phi2(zs, 2))
    V2 = np.asarray(partner.V2_z(zs))
    t2 = np.asarray(form.P4(zs)) * g2
    t1 = np.asarray(form.P3(zs)) * g1
    t0 = (partner.other.energy - V2) * g0
    scale = float(np.max(np.abs(t2) + np.abs(t1) + np.abs(t0)))
    return _check(name, t2 + t1 + t0, max(scale, 1e-300), zs, kind, s)


# -- finite differences -------------------------------------------------------------

def fd_hamiltonian_residual(V, rho, psi, E, grid, radial=None, h=FD_STEP, poles=(),
                            full_output=False, richardson=True):
    """Max relative residual of rho(-psi'' - (d-1)/x psi' + Vt psi) = E psi.

    Derivatives use central differences with step ``h`` and, unless
    ``richardson`` is False, one Richardson halving. For radial problems ``radial = (d, l)`` and
    Vt = V - l(l+d-2)/x**2; otherwise d = 1 and Vt = V.

    The pointwise residual is |lhs - E psi| / (|E psi| + |rho psi''| + eps)
    where eps is 1e-10 times the largest denominator plus the round-off
    floor of the second difference, 10 u max|rho psi| / h**2 (u the unit
    roundoff). Exact nodes of psi therefore do not divide by zero.

    Raises
    ------
    PoleError
        If a grid point lies within 10 h of a listed pole.
    InvalidInputError
        If psi vanishes on the whole grid.
    """
    x = np.asarray(grid, dtype=float)
    for p in poles:
        if np.any(np.abs(x - p) < 10 * h):
            raise PoleError(f"grid point within {10 * h:g} of pole at x={p}", location=p)

    def d12(step):
        fp, fm, f0 = psi(x + step), psi(x - step), psi(x)
        return (fp - fm) / (2 * step), (fp - 2 * f0 + fm) / step ** 2

    d1, d2 = d12(h)
    if richardson:
        d1b, d2b = d12(h / 2)
        d1 = (4 * d1b - d1) / 3
        d2 = (4 * d2b - d2) / 3
    f0 = np.asarray(psi(x))
    if not np.any(f0 != 0):
        raise InvalidInputError("psi is identically zero on the grid (degenerate input)")
    r = np.asarray(rho(x))
    Vt = np.asarray(V(x), dtype=float)
    dd = 1.0
    if radial is not None:
        dd, l = radial
        Vt = Vt - l * (l + dd - 2) / x ** 2
    lhs = r * (-d2 - (dd - 1) / x * d1 + Vt * f0) if radial is not None else r * (-d2 + Vt * f0)
    den = np.abs(E * f0) + np.abs(r * d2)
    floor = 10 * np.finfo(float).eps * float(np.max(np.abs(r * f0))) / h ** 2
    eps = 1e-10 * float(np.max(den)) + floor + 1e-300
    res = np.abs(lhs - E * f0) / (den + eps)
    i = int(np.argmax(res))
    if full_output:
        return float(res[i]), float(x[i])
    return float(res[i])


def _fd_grid(case, grid, poles=(), h=FD_STEP):
    xs = case.x_grid(grid)
    lo, hi = case.x_domain
    keep = (xs > lo + 10 * h) & (xs < hi - 10 * h)
    for p in poles:
        keep &= np.abs(xs - p) >= 10 * h
    return xs[keep]


def fd_checks(partner, grid=None, s=None):
    """FD residuals of the original pair and of psi2 under V^(2)."""
    s = tol_scale() if s is None else s
    case = partner.case
    seed, other = partner.seed, partner.other
    poles = partner.seed_pole_xs((grid or case.default_grid)[:2])
    xs = _fd_grid(case, grid, poles)
    rho = case.weight_rho
    out = []

    def wf(i):
        return lambda x: np.real(np.asarray(partner.wavefunctions(x)[i]))

    for label, i, V, E, kind in (("fd_seed", 0, case.V_x, seed.energy, "fd_original"),
                                 ("fd_other", 1, case.V_x, other.energy, "fd_original"),
                                 ("fd_partner", 2, partner.V2_x, other.energy, "fd_partner")):
        r, at = fd_hamiltonian_residual(V, rho, wf(i), float(np.real(E)), xs, full_output=True)
        out.append(Check(label, r, TOLERANCES[kind] * s, at))
    if case.radial is not None:
        rw = radial_wrap(partner)
        rad = (case.radial.d_dim, case.radial.l)
        xr = xs[xs > 0]

        def wfs(i):
            return lambda x: np.real(np.asarray(rw.wavefunctions(x)[i]))

        for label, i, V, E, kind in (("fd_radial_seed", 0, rw.V_S, seed.energy, "fd_original"),
                                     ("fd_radial_other", 1, rw.V_S, other.energy, "fd_original"),
                                     ("fd_radial_partner", 2, rw.V_S2, other.energy, "fd_partner")):
            r, at = fd_hamiltonian_residual(V, rho, wfs(i), float(np.real(E)), xr, radial=rad,
                                            full_output=True)
            out.append(Check(label, r, TOLERANCES[kind] * s, at))
    return out


# -- singularities ------------------------------------------------------------------

@dataclass(frozen=True)
class Pole:
    x: float
    kind: str  # "new" or "shared"


def _safe_eval(f, xs):
    """f on xs with NaN wherever f raises a pole error, is non-finite or
    has a non-negligible imaginary part."""
    with np.errstate(all="ignore"):
        try:
            v = np.asarray(f(xs))
            if np.iscomplexobj(v):
                v = np.where(np.abs(v.imag) <= 1e-9 * (1 + np.abs(v.real)), v.real, np.nan)
            v = v.astype(float)
            return np.where(np.isfinite(v), v, np.nan)
        except (QESError, ZeroDivisionError, FloatingPointError):
            if xs.size == 1:
                return np.array([np.nan])
            m = xs.size // 2
            return np.concatenate([_safe_eval(f, xs[:m]), _safe_eval(f, xs[m:])])


def _value_at(f, t):
    return float(_safe_eval(f, np.array([t]))[0])


def _refine_flip(f, lo, hi, fa, iters=80):
    """Bisect a sign change of f; returns (x, max |f| at the final bracket)."""
    for _ in range(iters):
        if hi - lo <= 1e-12 * (1.0 + abs(lo)):
            break
        mid = 0.5 * (lo + hi)
        fm = _value_at(f, mid)
        if not np.isfinite(fm):
            return mid, math.inf
        if fm * fa < 0:
            hi = mid
        else:
            lo, fa = mid, fm
    return 0.5 * (lo + hi), max(abs(_value_at(f, lo)), abs(_value_at(f, hi)))


def _refine_peak(f, lo, hi):
    """Maximize |f| on [lo, hi]; returns (x, |f|) with inf for pole markers."""
    def neg(t):
        v = _value_at(f, t)
        return -1e300 if not np.isfinite(v) else -abs(v)

    res = minimize_scalar(neg, bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-12 * (1.0 + abs(lo)), "maxiter": 200})
    val = -res.fun
    return float(res.x), (math.inf if val >= 1e300 else val)


def _find_poles(f, xs, blowup, growth=10.0):
    """Pole locations of f sampled on xs.

    Candidates are pole markers, sign changes between neighbours and local
    maxima of |f|. Sign changes are bisected and maxima refined to ~1e-12;
    a candidate is a pole when the refined |f| exceeds ``blowup`` and grew by
    at least ``growth`` over the coarse samples, or when a coarse sample
    already exceeds ``blowup`` next to a sign change or as a local maximum.
    """
    v = _safe_eval(f, xs)
    a = np.abs(v)
    fin = np.isfinite(v)
    found = [float(x) for x in xs[~fin]]
    last = xs.size - 1
    for i in range(last):
        if fin[i] and fin[i + 1] and v[i] * v[i + 1] < 0:
            coarse = max(a[i], a[i + 1])
            if coarse > blowup:
                found.append(float(xs[i] if a[i] >= a[i + 1] else xs[i + 1]))
                continue
            x, val = _refine_flip(f, xs[i], xs[i + 1], v[i])
            if val > blowup and val > growth * coarse:
                found.append(x)
    for i in range(1, last):
        if not (fin[i - 1] and fin[i] and fin[i + 1]):
            continue
        if a[i] >= a[i - 1] and a[i] >= a[i + 1] and (a[i] > a[i - 1] or a[i] > a[i + 1]):
            if a[i] > blowup:
                found.append(float(xs[i]))
                continue
            x, val = _refine_peak(f, xs[i - 1], xs[i + 1])
            if val > blowup and val > growth * a[i]:
                found.append(x)
    found.sort()
    step = (xs[-1] - xs[0]) / max(last, 1)
    out = []
    for x in found:
        if out and x - out[-1][-1] <= 2.5 * step:
            out[-1].append(x)
        else:
            out.append([x])
    return [_pick(f, cl) for cl in out]


def _pick(f, cluster):
    """Representative of a pole cluster: a pole marker if present, else the
    point of largest |f|."""
    vals = [_value_at(f, x) for x in cluster]
    for x, val in zip(cluster, vals):
        if not np.isfinite(val):
            return x
    return cluster[int(np.argmax(np.abs(vals)))]


def singularity_scan(Vmap, domain, resolution=2000, original=None, extra_points=(),
                     blowup=1e8, shared_tol=1e-6):
    """Poles of ``Vmap`` on ``domain``, classified against ``original``.

    A pole is a pole marker (PoleError or non-finite value) or a blowup
    |V| > ``blowup`` that changes sign across it or peaks there. Poles within
    max(``shared_tol``, two grid steps) of a pole of ``original`` are
    "shared"; the rest are "new". ``extra_points`` are inserted into the
    grid so known singular locations are sampled exactly.
    """
    if resolution < 100:
        raise InvalidInputError("resolution must be >= 100")
    lo, hi = domain
    if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
        raise InvalidInputError("scan domain must be finite with hi > lo")
    xs = np.linspace(lo, hi, int(resolution))
    extra = [p for p in extra_points if lo <= p <= hi]
    if extra:
        xs = np.unique(np.concatenate([xs, extra]))
    found = _find_poles(Vmap, xs, blowup)
    base = _find_poles(original, xs, blowup) if original is not None else []
    tol = max(shared_tol, 2 * (hi - lo) / (resolution - 1))
    return [Pole(p, "shared" if any(abs(p - q) <= tol for q in base) else "new") for p in found]


def scan_domain(case, grid=None):
    """Finite scan interval: the grid range widened to finite domain ends."""
    lo, hi, _ = grid or case.default_grid
    dlo, dhi = case.x_domain
    if math.isfinite(dlo):
        lo = min(lo, dlo)
    if math.isfinite(dhi):
        hi = max(hi, dhi)
    return lo, hi


def partner_poles(partner, grid=None, resolution=2000):
    case = partner.case
    return singularity_scan(partner.V2_x, scan_domain(case, grid), resolution,
                            original=case.V_x,
                            extra_points=partner.seed_pole_xs(scan_domain(case, grid)))


def _x_samples(case, partner, grid, points):
    """Interior x points that avoid P4 = 0, seed nodes and r = 0."""
    lo, hi, _ = grid or case.default_grid
    xs = np.linspace(lo, hi, points + 2)[1:-1]
    lo_d, hi_d = case.x_domain
    xs = xs[(xs > lo_d) & (xs < hi_d)]
    z = np.asarray(case.z_of_x(xs), dtype=np.complex128)
    p4 = kernels.horner(partner.form.a, z, 0)
    p4s = kernels.horner(np.abs(partner.form.a), np.abs(z), 0).real
    keep = np.abs(p4) > 1e-10 * np.maximum(p4s, 1e-300)
    roots = np.atleast_1d(partner.seed.roots)
    if roots.size:
        keep &= np.min(np.abs(z[:, None] - roots[None, :]), axis=1) > 1e-6
    if case.radial is not None:
        keep &= xs > 0
    return xs[keep]


# -- oracle cross-check ----------------------------------------------------------------

def _field_check(name, eng, ora, where, s):
    eng = np.asarray(eng, dtype=np.complex128)
    ora = np.asarray(ora, dtype=np.complex128)
    err = np.abs(eng - ora) / (1 + np.abs(ora))
    return _check(name, err, 1.0, where, "oracle_field", s)


def oracle_crosscheck(case, partner, solutions, grid=None, oracle=None, s=None, points=50):
    """Compare the engine with the n=1 closed forms on ``points``-point grids.

    Partner quantities are compared only when the engine seed is the closed
    form's seed state.
    """
    s = tol_scale() if s is None else s
    if oracle is None:
        oracle = catalog.closed_form_oracle(case)
    if oracle is None:
        return []
    out = []
    E = np.sort(np.real([sol.energy for sol in solutions]))
    Eo = np.sort(np.real(oracle.energies))
    out.append(_check("oracle_energies", E - Eo, np.maximum(1.0, np.abs(Eo)), Eo,
                      "oracle_spectrum", s))
    R = np.sort(np.real([complex(sol.roots[0]) for sol in solutions]))
    Ro = np.sort(np.real(oracle.roots))
    out.append(_check("oracle_roots", R - Ro, np.maximum(1.0, np.abs(Ro)), Ro, "oracle_spectrum", s))
    if abs(complex(partner.seed.roots[0]) - oracle.seed_root) > 1e-8 * max(1.0, abs(oracle.seed_root)):
        return out
    zs = sample_z(partner, points, grid)
    out.append(_field_check("oracle_phi2", partner.phi2(zs), oracle.phi2(zs), zs, s))
    out.append(_field_check("oracle_V2_z", partner.V2_z(zs), oracle.V2(zs), zs, s))
    if case.algebraic_only:
        return out
    xs = _x_samples(case, partner, grid, points)
    if oracle.V2x is not None:
        out.append(_field_check("oracle_V2_x", partner.V2_x(xs), oracle.V2x(xs), xs, s))
    if oracle.psi2x is not None:
        out.append(_field_check("oracle_psi2_x", partner.wavefunctions(xs)[2], oracle.psi2x(xs), xs, s))
    if case.radial is not None and oracle.VS2 is not None:
        rw = radial_wrap(partner)
        out.append(_field_check("oracle_VS2", rw.V_S2(xs), oracle.VS2(xs), xs, s))
        out.append(_field_check("oracle_psiS2", rw.wavefunctions(xs)[2], oracle.psiS2(xs), xs, s))
    return out


# -- suite --------------------------------------------------------------------------

def spectrum_checks(form, sols, s=None):
    s = tol_scale() if s is None else s
    bae = [sol.bae_residual for sol in sols]
    ode = [sol.ode_residual_max for sol in sols]
    cons = [qes_consistency_check(form, sol.roots, sol.energy).max_discrepancy for sol in sols]
    Es = [sol.energy for sol in sols]
    return [_check("bae_residual", bae, 1.0, Es, "bae", s),
            _check("ode_residual", ode, 1.0, Es, "ode", s),
            _check("qes_consistency", cons, 1.0, Es, "consistency", s)]


def verify_case(case, params=None, n=1, seed_index=0, other_index=None, form=None,
                v2_sign=1.0, grid=None, oracle=True, resolution=2000):
    """Run the full suite for one case and return a VerificationReport.

    ``case`` is a case name or a CaseInstance. ``form`` replaces the case's
    ODE form while keeping its x-space data (used by the mutation harness).

    Raises
    ------
    QESError
        When the spectrum itself cannot be produced.
    """
    s = tol_scale()
    inst = case if isinstance(case, catalog.CaseInstance) else catalog.instantiate(case, params, n)
    form = inst.form if form is None else form
    sols = solve_spectrum(form)
    report = VerificationReport(inst.case_id, inst.n, dict(inst.params))
    report.checks += spectrum_checks(form, sols, s)
    partner = build_partner(inst, sols, seed_index, other_index, form, v2_sign=v2_sign)
    report.checks += identity_checks(partner, s=s)
    si = partner.meta["seed_index"]
    for j in range(len(sols)):
        if j in (si, partner.meta["other_index"]):
            continue
        pj = build_partner(inst, sols, si, j, form, v2_sign=v2_sign)
        pre = f"state{j}:"
        zs = sample_z(pj, 50)
        ids = identity_checks(pj, zs=zs, zs_probe=zs[:4], prefix=pre, s=s)
        report.checks += [c for c in ids if c.name in (pre + "mapping", pre + "reverse_mapping")]
        report.checks.append(partner_ode_check(pj, zs, pre + "partner_ode", "partner_ode_state", s))
    if not inst.algebraic_only:
        xs = _x_samples(inst, partner, grid, 50)
        a = np.asarray(partner.V2_x(xs))
        b = np.asarray(partner.V2_x_from_ode(xs))
        report.checks.append(_check("v2_routes", a - b, 1 + np.abs(b), xs, "v2_routes", s))
        report.checks += fd_checks(partner, grid, s)
        poles = partner_poles(partner, grid, resolution)
        report.new_poles = [p.x for p in poles if p.kind == "new"]
        report.shared_poles = [p.x for p in poles if p.kind == "shared"]
        report.checks.append(Check("new_poles", float(len(report.new_poles)),
                                   TOLERANCES["new_poles"],
                                   report.new_poles[0] if report.new_poles else None))
    if oracle and inst.n == 1:
        report.checks += oracle_crosscheck(inst, partner, sols, grid, s=s)
    return report


# -- mutation harness -------------------------------------------------------------------

@dataclass(frozen=True)
class MutationResult:
    which: str
    k: int
    detected: bool
    reason: str


def mutation_sweep(case, params=None, delta=1e-3, n=1):
    """Perturb each ODE coefficient in turn and rerun the suite.

    The catalog x-space data and the closed-form oracles stay those of the
    unperturbed case. A mutation counts as detected when any check fails or
    the engine rejects the perturbed form.
    """
    inst = case if isinstance(case, catalog.CaseInstance) else catalog.instantiate(case, params, n)
    out = []
    for which, size in (("a", 5), ("b", 4), ("v1", 3)):
        for k in range(size):
            form = inst.form.perturbed(which, k, delta)
            try:
                rep = verify_case(inst, form=form, resolution=400)
                bad = [c.name for c in rep.failed]
                out.append(MutationResult(which, k, bool(bad), ",".join(bad[:4])))
            except QESError as exc:
                out.append(MutationResult(which, k, True, f"{type(exc).__name__}: {exc}"))
    return out


__all__ = ["Check", "VerificationReport", "tol_scale", "sample_z", "identity_checks",
           "partner_ode_check", "fd_hamiltonian_residual", "fd_checks", "Pole",
           "singularity_scan", "scan_domain", "partner_poles", "oracle_crosscheck",
           "spectrum_checks", "verify_case", "MutationResult", "mutation_sweep", "TOLERANCES"]
