"""The twelve QES cases as parameterized factories.

Every case provides its ODE standard form in the algebraic variable z. Cases
I-X also carry the change of variables z(x), the gauge exponent G(z) with
psi = phi * exp(-G), the weight rho = C z**p, and the physical potential.
Lame XI/XII are algebraic only.

Conventions
-----------
rho(x) (-psi'' + V psi) = E psi           (cases I-VI, X; rho = 1 except II, III, V)
rho(r) (-psi_S'' - (d-1)/r psi_S' - l(l+d-2)/r**2 psi_S + V_S psi_S) = E psi_S
                                           (VII-IX, with psi_S = r**(-(d-1)/2) psi)

``V_x`` is always the potential of the one-dimensional operator acting on
psi; for radial cases it differs from the tabulated ``V_S`` by
-l(l+d-2)/r**2 + (d-1)(d-3)/(4 r**2).
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import AlgebraicOnlyError, InvalidInputError
from .odeform import OdeStandardForm

CASE_IDS = ("MorseI", "MorseII", "MorseIII", "PoschlTellerIV", "PoschlTellerV",
            "SexticVI", "SexticVII", "CoulombVIII", "CoulombIX", "PeriodicX",
            "LameXI", "LameXII")


@dataclass(frozen=True)
class ZMap:
    """Explicit change of variables with its first two x-derivatives."""

    name: str
    z: Callable
    x: Callable
    dz: Callable
    d2z: Callable


def _exp_map(al):
    return ZMap("exp(-alpha x)",
                lambda x: np.exp(-al * np.asarray(x, float)),
                lambda z: -np.log(z) / al,
                lambda x: -al * np.exp(-al * np.asarray(x, float)),
                lambda x: al * al * np.exp(-al * np.asarray(x, float)))


def _sech2_map(al):
    def z(x):
        return 1.0 / np.cosh(al * np.asarray(x, float)) ** 2

    return ZMap("cosh(alpha x)**-2", z,
                lambda zz: np.arccosh(1.0 / np.sqrt(zz)) / al,
                lambda x: -2.0 * al * np.tanh(al * np.asarray(x, float)) * z(x),
                lambda x: -2.0 * al * al * z(x) * (3.0 * z(x) - 2.0))


def _square_map():
    return ZMap("x**2", lambda x: np.asarray(x, float) ** 2, np.sqrt,
                lambda x: 2.0 * np.asarray(x, float),
                lambda x: np.full_like(np.asarray(x, float), 2.0))


def _identity_map():
    return ZMap("x", lambda x: np.asarray(x, float), lambda z: np.asarray(z, float),
                lambda x: np.ones_like(np.asarray(x, float)),
                lambda x: np.zeros_like(np.asarray(x, float)))


def _cos_map(al):
    return ZMap("cos(alpha x)", lambda x: np.cos(al * np.asarray(x, float)),
                lambda z: np.arccos(z) / al,
                lambda x: -al * np.sin(al * np.asarray(x, float)),
                lambda x: -al * al * np.cos(al * np.asarray(x, float)))


@dataclass(frozen=True)
class RadialData:
    d_dim: float
    l: float


@dataclass(frozen=True)
class CaseInstance:
    """One QES case with bound parameters.

    ``rho_z = (C, p)`` encodes rho = C z**p. x-space members are None for
    algebraic-only cases.
    """

    case_id: str
    cli_id: str
    params: dict
    n: int
    form: OdeStandardForm
    zmap: Optional[ZMap]
    gauge_G: Optional[Callable]
    gauge_K: Optional[Callable]
    rho_z: tuple
    V_x: Optional[Callable]
    V_S: Optional[Callable] = None
    radial: Optional[RadialData] = None
    x_domain: tuple = (-np.inf, np.inf)
    z_domain: tuple = (-np.inf, np.inf)
    default_grid: tuple = (-3.0, 3.0, 601)
    energy_shift: float = 0.0
    table: str = ""
    notes: tuple = field(default_factory=tuple)

    @property
    def algebraic_only(self):
        return self.zmap is None

    def _need_x(self):
        if self.zmap is None:
            raise AlgebraicOnlyError(f"{self.case_id} is supported only in the algebraic variable")

    def z_of_x(self, x):
        self._need_x()
        return self.zmap.z(x)

    def x_of_z(self, z):
        self._need_x()
        return self.zmap.x(z)

    def dzdx(self, x):
        self._need_x()
        return self.zmap.dz(x)

    def d2zdx2(self, x):
        self._need_x()
        return self.zmap.d2z(x)

    def rho_of_z(self, z, order=0):
        C, p = self.rho_z
        z = np.asarray(z, dtype=float)
        if order == 0:
            return C * z ** p
        return C * p * z ** (p - 1)

    def weight_rho(self, x):
        self._need_x()
        return self.rho_of_z(self.z_of_x(x))

    def dlnrho_dx(self, x):
        self._need_x()
        p = self.rho_z[1]
        if p == 0:
            return np.zeros_like(np.asarray(x, float))
        return p * self.dzdx(x) / self.z_of_x(x)

    def d2rho_over_rho(self, x):
        """rho''(x) / rho(x)."""
        self._need_x()
        p = self.rho_z[1]
        if p == 0:
            return np.zeros_like(np.asarray(x, float))
        z = self.z_of_x(x)
        u = self.dzdx(x) / z
        return p * (p - 1) * u * u + p * self.d2zdx2(x) / z

    def centrifugal_shift(self, r):
        """V_x - V_S for radial cases, zero otherwise."""
        if self.radial is None:
            return np.zeros_like(np.asarray(r, float))
        d, l = self.radial.d_dim, self.radial.l
        r = np.asarray(r, float)
        return (-l * (l + d - 2) + (d - 1) * (d - 3) / 4.0) / (r * r)

    def param(self, name):
        return self.params[name]

    def x_grid(self, grid=None):
        lo, hi, pts = grid or self.default_grid
        return np.linspace(lo, hi, int(pts))

    def z_grid(self, grid=None):
        """Sample points in z: the image of the x grid, or a direct z range
        for algebraic-only cases."""
        xs = self.x_grid(grid)
        return xs if self.algebraic_only else self.z_of_x(xs)


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class CaseSpec:
    case_id: str
    cli_id: str
    param_names: tuple
    figure_params: dict
    builder: Callable
    table: str
    kind: str
    constraints: str


_REGISTRY = {}


def _register(case_id, cli_id, param_names, figure_params, table, kind, constraints):
    def deco(fn):
        _REGISTRY[cli_id] = CaseSpec(case_id, cli_id, tuple(param_names), dict(figure_params),
                                     fn, table, kind, constraints)
        return fn
    return deco


def registry():
    """Mapping cli id -> CaseSpec in catalog order."""
    return dict(_REGISTRY)


def resolve(case):
    """Accept a cli id ('morse1') or a case id ('MorseI')."""
    if case in _REGISTRY:
        return _REGISTRY[case]
    for spec in _REGISTRY.values():
        if spec.case_id == case:
            return spec
    raise InvalidInputError(f"unknown case {case!r}; known: {', '.join(_REGISTRY)}")


def _require(cond, msg):
    if not cond:
        raise InvalidInputError(msg)


def _positive(p, *names):
    for nm in names:
        _require(p[nm] > 0, f"{nm} must be > 0 (got {p[nm]})")


def _binary(p, *names):
    for nm in names:
        _require(p[nm] in (0, 1), f"{nm} must be 0 or 1 (got {p[nm]})")


def instantiate(case, params=None, n=1):
    """Build a CaseInstance.

    Parameters
    ----------
    case : str
        Cli id (``morse1`` ...) or case id (``MorseI`` ...).
    params : dict, optional
        Parameter values by name; missing names fall back to the figure
        parameters. Unknown names are rejected.
    n : int
        Polynomial degree.
    """
    spec = resolve(case)
    params = dict(params or {})
    unknown = set(params) - set(spec.param_names)
    if unknown:
        raise InvalidInputError(
            f"unknown parameter(s) {sorted(unknown)} for {spec.cli_id}; "
            f"expected {list(spec.param_names)}")
    full = dict(spec.figure_params)
    full.update({k: float(v) for k, v in params.items()})
    if isinstance(n, float) and not n.is_integer():
        raise InvalidInputError("n must be an integer")
    n = int(n)
    _require(n >= 0, "n must be >= 0")
    for k, v in full.items():
        _require(math.isfinite(v), f"parameter {k} must be finite")
    return spec.builder(full, n)


def physical_domain(inst):
    """Return {'x': (lo, hi) or None, 'z': (lo, hi), 'algebraic_only': bool}."""
    return {"x": None if inst.algebraic_only else inst.x_domain,
            "z": inst.z_domain, "algebraic_only": inst.algebraic_only}


def _form(a, b, v1, n):
    return OdeStandardForm(np.asarray(a, float), np.asarray(b, float), np.asarray(v1, float), n)


# -- cases I-X ------------------------------------------------------------------

@_register("MorseI", "morse1", ("a", "b", "c", "alpha"),
           {"a": 1.0, "b": 1.0, "c": 1.0, "alpha": 1.0},
           "V = a^2 e^{-2 alpha x} - a[2b + alpha(2n+1)] e^{-alpha x} + c(2b - alpha) e^{alpha x} + c^2 e^{2 alpha x}",
           "schrodinger", "alpha > 0")
def _morse1(p, n):
    a, b, c, al = p["a"], p["b"], p["c"], p["alpha"]
    _positive(p, "alpha")
    form = _form([0, 0, al * al], [2 * c * al, al * (2 * b + al), -2 * a * al],
                 [-(b * b - 2 * a * c), -2 * n * a * al], n)

    def V(x):
        e = np.exp(al * np.asarray(x, float))
        return (a * a / e ** 2 - a * (2 * b + al * (2 * n + 1)) / e
                + c * (2 * b - al) * e + c * c * e ** 2)

    return CaseInstance(
        "MorseI", "morse1", p, n, form, _exp_map(al),
        lambda z: (c / z + a * z - b * np.log(z)) / al,
        lambda z: (-c / z ** 2 + a - b / z) / al,
        (1.0, 0), V, x_domain=(-np.inf, np.inf), z_domain=(0.0, np.inf),
        default_grid=(-3.0, 3.0, 601), table=resolve("morse1").table)


@_register("MorseII", "morse2", ("a", "b", "d", "alpha"),
           {"a": -6.0, "b": 1.0, "d": 2.0, "alpha": 1.0},
           "V = d^2 e^{-4 alpha x} + 2ad e^{-3 alpha x} + [a^2 - 2d(b + alpha + n alpha)] e^{-2 alpha x} - (2ab + alpha a) e^{-alpha x} + b^2",
           "weighted", "alpha > 0")
def _morse2(p, n):
    a, b, d, al = p["a"], p["b"], p["d"], p["alpha"]
    _positive(p, "alpha")
    form = _form([0, al], [2 * b + al, -2 * a, -2 * d], [0, -2 * n * d], n)

    def V(x):
        e = np.exp(-al * np.asarray(x, float))
        return (d * d * e ** 4 + 2 * a * d * e ** 3 + (a * a - 2 * d * (b + al + n * al)) * e ** 2
                - (2 * a * b + al * a) * e + b * b)

    return CaseInstance(
        "MorseII", "morse2", p, n, form, _exp_map(al),
        lambda z: (a * z - b * np.log(z) + d * z * z / 2) / al,
        lambda z: (a - b / z + d * z) / al,
        (1.0 / al, -1), V, z_domain=(0.0, np.inf),
        default_grid=(-1.5, 6.0, 601), table=resolve("morse2").table)


@_register("MorseIII", "morse3", ("a", "b", "d", "alpha"),
           {"a": -1.0, "b": 1.0, "d": 0.5, "alpha": 0.5},
           "V = d^2 e^{4 alpha x} + 2ad e^{3 alpha x} + [a^2 - 2d(alpha + b)] e^{2 alpha x} - a(2b + alpha) e^{alpha x} + b^2 + alpha n(alpha n - 2b)",
           "weighted", "alpha > 0, 2b - alpha != 0")
def _morse3(p, n):
    a, b, d, al = p["a"], p["b"], p["d"], p["alpha"]
    _positive(p, "alpha")
    _require(2 * b - al != 0, "2b - alpha must be nonzero")
    form = _form([0, 0, 0, al], [2 * d, 2 * a, al - 2 * b], [0, -n * (2 * b - n * al)], n)

    def V(x):
        e = np.exp(al * np.asarray(x, float))
        return (d * d * e ** 4 + 2 * a * d * e ** 3 + (a * a - 2 * d * (al + b)) * e ** 2
                - a * (2 * b + al) * e + b * b + al * n * (al * n - 2 * b))

    return CaseInstance(
        "MorseIII", "morse3", p, n, form, _exp_map(al),
        lambda z: d / (2 * al * z * z) + a / (al * z) + b * np.log(z) / al,
        lambda z: -d / (al * z ** 3) - a / (al * z * z) + b / (al * z),
        (1.0 / al, 1), V, z_domain=(0.0, np.inf),
        default_grid=(-6.0, 2.0, 601), table=resolve("morse3").table,
        notes=("potential includes the -a(2b+alpha) e^{alpha x} term implied by the ODE",))


@_register("PoschlTellerIV", "pt4", ("a", "c", "alpha", "p"),
           {"a": 1.0, "c": 1.0, "alpha": 1.0, "p": 0.0},
           "V = c^2 cosh^4 - c(c + 2 alpha - 2a) cosh^2 - {a^2 + a alpha + alpha(2n+p)[alpha(2n+p+1) + 2a]} cosh^{-2} + a^2 + c alpha - 2ac",
           "schrodinger", "alpha > 0, p in {0, 1}")
def _pt4(p, n):
    a, c, al, pp = p["a"], p["c"], p["alpha"], p["p"]
    _positive(p, "alpha")
    _binary(p, "p")
    form = _form([0, 0, 4 * al, -4 * al],
                 [4 * c, 4 * a - 4 * c + 4 * al, -(4 * a + 2 * al * (3 + 2 * pp))],
                 [2 * c * pp, -2 * n * (2 * a + al + 2 * n * al + 2 * pp * al)], n)

    def V(x):
        ch2 = np.cosh(al * np.asarray(x, float)) ** 2
        return (c * c * ch2 ** 2 - c * (c + 2 * al - 2 * a) * ch2
                - (a * a + a * al + al * (2 * n + pp) * (al * (2 * n + pp + 1) + 2 * a)) / ch2
                + a * a + c * al - 2 * a * c)

    def G(z):
        out = (c / z - a * np.log(z)) / (2 * al)
        if pp:
            out = out - 0.5 * pp * np.log(1 - z)
        return out

    return CaseInstance(
        "PoschlTellerIV", "pt4", p, n, form, _sech2_map(al), G,
        lambda z: -c / (2 * al * z * z) - a / (2 * al * z) + (pp / (2 * (1 - z)) if pp else 0.0),
        (1.0 / al, 0), V, z_domain=(0.0, 1.0),
        default_grid=(0.05, 2.5, 500) if pp else (-2.5, 2.5, 501),
        table=resolve("pt4").table)


@_register("PoschlTellerV", "pt5", ("a", "b", "alpha", "p"),
           {"a": 1.0, "b": 1.0, "alpha": 1.0, "p": 1.0},
           "V = -b^2 cosh^{-6} - b(2a + 3b + alpha + 4n alpha + 2p alpha) cosh^{-4} - [a^2 + 2ab + a alpha(2p + 2n - 1) + alpha(2b(n+p-1) + alpha(n + 2n^2 + 2np + (p-1)p))] cosh^{-2} + [a + 2b + alpha(p-1)]^2",
           "weighted", "alpha > 0, b != 0, p in {0, 1}")
def _pt5(p, n):
    a, b, al, pp = p["a"], p["b"], p["alpha"], p["p"]
    _positive(p, "alpha")
    _binary(p, "p")
    _require(b != 0, "b must be nonzero")
    # p = 1: gauge cosh^{-(a+2b)/alpha} exp(b/(2 alpha) cosh^{-2});
    # p = 0: the same times tanh(alpha x), which shifts the tabulated n by one.
    q = 1 - int(pp)
    if q == 0:
        v0 = -(2 * a * n + al * n * (3 + 2 * n) + 2 * b * n)
    else:
        v0 = -2 * a * n + 2 * a - al * (2 * n * n + 5 * n + 1) - 2 * b * n + 4 * b
    form = _form([0, 4 * al, -4 * al],
                 [4 * al + 4 * a + 8 * b, -(4 * a + 4 * b + 6 * al + 4 * al * q), -4 * b],
                 [v0, -4 * b * n], n)
    nt = n + q  # index at which the tabulated potential is evaluated

    def V(x):
        s = 1.0 / np.cosh(al * np.asarray(x, float)) ** 2
        out = (-b * b * s ** 3 - b * (2 * a + 3 * b + al + 4 * nt * al + 2 * pp * al) * s ** 2
               - (a * a + 2 * a * b + a * al * (2 * pp + 2 * nt - 1)
                  + al * (2 * b * (nt + pp - 1) + al * (nt + 2 * nt * nt + 2 * nt * pp + (pp - 1) * pp))) * s
               + (a + 2 * b + al * (pp - 1)) ** 2)
        if q:
            out = out + 2 * a * al - al * al + 4 * al * b
        return out

    def G(z):
        out = -b * z / (2 * al) - (a + 2 * b) * np.log(z) / (2 * al)
        if q:
            out = out - 0.5 * np.log(1 - z)
        return out

    return CaseInstance(
        "PoschlTellerV", "pt5", p, n, form, _sech2_map(al), G,
        lambda z: -b / (2 * al) - (a + 2 * b) / (2 * al * z) + (q / (2 * (1 - z)) if q else 0.0),
        (1.0 / al, -1), V, z_domain=(0.0, 1.0),
        default_grid=(-3.0, 3.0, 601) if pp else (0.05, 3.0, 500), table=resolve("pt5").table,
        notes=("P3 linear coefficient is -(4a+4b+6alpha) for p=1",
               "cosh^{-2} coefficient carries a alpha(2p+2n-1)",
               "p=0 uses an extra tanh gauge factor; the tabulated potential is then taken at n+1"))


@_register("SexticVI", "sextic6", ("a", "b"), {"a": 1.0, "b": 1.0},
           "V = a^2 x^6 + 2ab x^4 + [b^2 - a(4n+3)] x^2", "schrodinger", "a > 0")
def _sextic6(p, n):
    a, b = p["a"], p["b"]
    _positive(p, "a")
    form = _form([0, 4], [2, -4 * b, -4 * a], [b, -4 * a * n], n)

    def V(x):
        x2 = np.asarray(x, float) ** 2
        return a * a * x2 ** 3 + 2 * a * b * x2 ** 2 + (b * b - a * (4 * n + 3)) * x2

    return CaseInstance(
        "SexticVI", "sextic6", p, n, form, _square_map(),
        lambda z: z * (a * z + 2 * b) / 4, lambda z: (2 * a * z + 2 * b) / 4,
        (1.0, 0), V, z_domain=(0.0, np.inf), default_grid=(-2.0, 2.0, 401),
        table=resolve("sextic6").table)


def _radial_check(p, allow_negative=False):
    d = p["d"]
    _require(float(d).is_integer(), "dimension d must be an integer")
    if not allow_negative:
        _require(d >= 1, "dimension d must be >= 1")


@_register("SexticVII", "sextic7", ("a", "b", "c", "l", "d"),
           {"a": 2.0, "b": 1.0, "c": 1.0, "l": 1.0, "d": 2.0},
           "V_S = a^2 r^6 + 2ab r^4 + [b^2 - a(4n + 2l + d - 2c + 2)] r^2 + [c(c - 2l - d + 2) + 2l(l + d - 2)] / r^2",
           "radial", "a > 0, integer d >= 1")
def _sextic7(p, n):
    a, b, c, l, d = p["a"], p["b"], p["c"], p["l"], p["d"]
    _positive(p, "a")
    _radial_check(p)
    D = 2 * c - d - 2 * l
    form = _form([0, 4], [2 * (-D), -4 * b, -4 * a], [-b * D, -4 * a * n], n)

    def VS(r):
        r = np.asarray(r, float)
        return (a * a * r ** 6 + 2 * a * b * r ** 4 + (b * b - a * (4 * n + 2 * l + d - 2 * c + 2)) * r * r
                + (c * (c - 2 * l - d + 2) + 2 * l * (l + d - 2)) / r ** 2)

    inst = CaseInstance(
        "SexticVII", "sextic7", p, n, form, _square_map(),
        lambda z: a * z * z / 4 + b * z / 2 + (D + 1) * np.log(z) / 4,
        lambda z: a * z / 2 + b / 2 + (D + 1) / (4 * z),
        (1.0, 0), None, V_S=VS, radial=RadialData(d, l), x_domain=(0.0, np.inf),
        z_domain=(0.0, np.inf), default_grid=(0.1, 2.0, 400), table=resolve("sextic7").table,
        notes=("the constant term of P3 is 2(-2c + d + 2l)",))
    return _with_1d_potential(inst)


def _with_1d_potential(inst):
    VS = inst.V_S

    def V(r):
        return VS(r) + inst.centrifugal_shift(r)

    return _replace(inst, V_x=V)


def _replace(inst, **kw):
    from dataclasses import replace
    return replace(inst, **kw)


@_register("CoulombVIII", "coulomb8", ("a", "b", "c", "l", "d"),
           {"a": 2.0, "b": -1.0, "c": 1.0, "l": 1.0, "d": 2.0},
           "V_S = a^2 r^2 + 2ab r - b(D_c - 1)/r + [c(c - 2l - d + 2) + 2l(d + l - 2)]/r^2 + b^2 - a(D_c + 2n),  D_c = d + 2l - 2c",
           "radial", "a > 0, integer d >= 1")
def _coulomb8(p, n):
    a, b, c, l, d = p["a"], p["b"], p["c"], p["l"], p["d"]
    _positive(p, "a")
    _radial_check(p)
    Dc = d + 2 * l - 2 * c
    form = _form([0, 1], [Dc - 1, -2 * b, -2 * a], [0, -2 * a * n], n)

    def VS(r):
        r = np.asarray(r, float)
        return (a * a * r * r + 2 * a * b * r - b * (Dc - 1) / r
                + (c * (c - 2 * l - d + 2) + 2 * l * (d + l - 2)) / r ** 2 + b * b - a * (Dc + 2 * n))

    inst = CaseInstance(
        "CoulombVIII", "coulomb8", p, n, form, _identity_map(),
        lambda z: a * z * z / 2 + b * z + (1 - Dc) * np.log(z) / 2,
        lambda z: a * z + b + (1 - Dc) / (2 * z),
        (1.0, 1), None, V_S=VS, radial=RadialData(d, l), x_domain=(0.0, np.inf),
        z_domain=(0.0, np.inf), default_grid=(0.1, 4.0, 400), table=resolve("coulomb8").table)
    return _with_1d_potential(inst)


@_register("CoulombIX", "coulomb9", ("a", "b", "c", "l", "d"),
           {"a": 0.5, "b": 4.0, "c": 15.0, "l": 1.0, "d": -5.0},
           "V_S = b^2/r^4 + b(D_c - 3)/r^3 + [c(c - 2l - d + 2) + 2ab + 2l(l + d - 2)]/r^2 - a(2n + D_c - 1)/r + a^2,  D_c = d + 2l - 2c",
           "radial", "a > 0, integer d (negative allowed)")
def _coulomb9(p, n):
    a, b, c, l, d = p["a"], p["b"], p["c"], p["l"], p["d"]
    _positive(p, "a")
    _radial_check(p, allow_negative=True)
    Dc = d + 2 * l - 2 * c
    form = _form([0, 0, 1], [2 * b, Dc - 1, -2 * a], [4 * a * b, -2 * a * n], n)

    def VS(r):
        r = np.asarray(r, float)
        return (b * b / r ** 4 + b * (Dc - 3) / r ** 3
                + (c * (c - 2 * l - d + 2) + 2 * a * b + 2 * l * (l + d - 2)) / r ** 2
                - a * (2 * n + Dc - 1) / r + a * a)

    inst = CaseInstance(
        "CoulombIX", "coulomb9", p, n, form, _identity_map(),
        lambda z: b / z + a * z + (1 - Dc) * np.log(z) / 2,
        lambda z: -b / z ** 2 + a + (1 - Dc) / (2 * z),
        (1.0, 2), None, V_S=VS, radial=RadialData(d, l), x_domain=(0.0, np.inf),
        z_domain=(0.0, np.inf), default_grid=(0.1, 5.0, 500), table=resolve("coulomb9").table,
        notes=("the 1/r^4 term of the potential is b^2/r^4",))
    return _with_1d_potential(inst)


@_register("PeriodicX", "periodic10", ("a", "alpha"), {"a": 1.0, "alpha": 1.0},
           "V = alpha^2 [a^2 sin^2(alpha x) - (2n+1) a cos(alpha x)]", "schrodinger", "alpha > 0")
def _periodic10(p, n):
    a, al = p["a"], p["alpha"]
    _positive(p, "alpha")
    form = _form([al * al, 0, -al * al], [2 * a * al * al, -al * al, -2 * a * al * al],
                 [0, -2 * a * al * al * n], n)

    def V(x):
        t = al * np.asarray(x, float)
        return al * al * (a * a * np.sin(t) ** 2 - (2 * n + 1) * a * np.cos(t))

    return CaseInstance(
        "PeriodicX", "periodic10", p, n, form, _cos_map(al),
        lambda z: -a * z, lambda z: -a * np.ones_like(np.asarray(z, float)),
        (1.0, 0), V, z_domain=(-1.0, 1.0),
        default_grid=(-math.pi / al, math.pi / al, 601), table=resolve("periodic10").table,
        notes=("P4 = alpha^2 (1 - z^2), as required by z = cos(alpha x)",))


# -- Lame cases -----------------------------------------------------------------

@_register("LameXI", "lame11", ("a1", "a2", "a3", "k1", "k2", "k3"),
           {"a1": 1.0, "a2": 2.0, "a3": 3.0, "k1": 0.0, "k2": 0.0, "k3": 0.0},
           "V = m(m+1) wp(z),  m = 2n + k1 + k2 + k3", "algebraic", "k_i in {0, 1}, distinct a_i")
def _lame11(p, n):
    a1, a2, a3 = p["a1"], p["a2"], p["a3"]
    _binary(p, "k1", "k2", "k3")
    _require(len({a1, a2, a3}) == 3, "a1, a2, a3 must be distinct")
    k1, k2, k3 = p["k1"], p["k2"], p["k3"]
    ks = k1 + k2 + k3
    m = 2 * n + ks
    s1 = a1 + a2 + a3
    s2 = a1 * a2 + a1 * a3 + a2 * a3
    s3 = a1 * a2 * a3
    P4 = [-4 * s3, 4 * s2, -4 * s1, 4]
    P3 = [2 * (2 * a1 * a2 * k3 + a1 * a2 + 2 * a1 * a3 * k2 + a1 * a3 + 2 * a2 * a3 * k1 + a2 * a3),
          -4 * (a1 * (k2 + k3 + 1) + a2 * (k1 + k3 + 1) + a3 * (k1 + k2 + 1)),
          2 * (2 * ks + 3)]
    kk = k1 + k2 + k3 + k1 * k2 + k1 * k3 + k2 * k3
    V1 = [a1 * (k2 + k3) ** 2 + a2 * (k1 + k3) ** 2 + a3 * (k1 + k2) ** 2,
          -(2 * kk - m * (m + 1))]
    form = _form(P4, P3, V1, n)
    full = dict(p)
    full["m"] = float(m)
    return CaseInstance(
        "LameXI", "lame11", full, n, form, None, None, None, (1.0, 0), None,
        x_domain=None, z_domain=(-np.inf, np.inf), default_grid=(3.2, 6.0, 300),
        energy_shift=m * (m + 1) * s1 / 3.0, table=resolve("lame11").table,
        notes=("energies are epsilon = E - m(m+1)(a1+a2+a3)/3",
               "P4 = 4 (xi - a1)(xi - a2)(xi - a3), constant term -4 a1 a2 a3"))


@_register("LameXII", "lame12", ("g2", "g3", "mu"), {"g2": 4.0, "g3": 0.0, "mu": 1.0},
           "V = kappa2 wp(2z) + kappa3 wp(z),  kappa2 = 2mu(mu-1), kappa3 = (n+2mu)(n+2mu+1)",
           "algebraic", "4 tau^3 - g2 tau - g3 not identically zero")
def _lame12(p, n):
    g2, g3, mu = p["g2"], p["g3"], p["mu"]
    _require(g2 != 0 or g3 != 0, "g2 and g3 cannot both vanish")
    form = _form([-g3 / 2, -g2 / 2, 0, 2], [-g2 * (2 * mu + 1) / 4, 0, 3 * (2 * mu + 1)],
                 [0, (6 * mu + 2 * n + 1) * n], n)
    full = dict(p)
    full["kappa2"] = 2 * mu * (mu - 1)
    full["kappa3"] = (n + 2 * mu) * (n + 2 * mu + 1)
    return CaseInstance(
        "LameXII", "lame12", full, n, form, None, None, None, (1.0, 0), None,
        x_domain=None, z_domain=(-np.inf, np.inf), default_grid=(1.2, 4.0, 300),
        table=resolve("lame12").table)


def closed_form_oracle(inst):
    """Hand-derived n=1 closed forms for the case, or None when n != 1."""
    from .oracles import oracle_for
    if inst.n != 1:
        return None
    return oracle_for(inst)
