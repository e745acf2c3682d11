"""Command-line front end: ``qes list | solve | susy | verify``.

Exit codes: 0 pass, 1 verification failure, 2 bad input, 3 degenerate
spectrum, 4 new singularity in the partner potential.
"""

import argparse
import csv
import io
import json
import math
import sys
import warnings

import numpy as np

from . import catalog
from .bethe import solve_spectrum
from .errors import AlgebraicOnlyError, InvalidInputError, QESError
from .odeform import qes_consistency_check
from .poly import realify
from .susy import build_partner, radial_wrap
from .verify import TOLERANCES, _safe_eval, partner_poles, tol_scale, verify_case

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DEGENERATE, EXIT_NEW_POLE = 0, 1, 2, 3, 4


class _UsageError(InvalidInputError):
    pass


# -- argument helpers --------------------------------------------------------------

def parse_params(items, case):
    """``["a=1", "alpha=0.5"]`` -> dict, checked against the case's names."""
    spec = catalog.resolve(case)
    out = {}
    for item in items or ():
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise _UsageError(f"parameter {item!r} is not of the form name=value")
        if key in out:
            raise _UsageError(f"parameter {key!r} given twice")
        if key not in spec.param_names:
            raise _UsageError(f"unknown parameter {key!r} for {spec.cli_id}; "
                              f"expected {list(spec.param_names)}")
        try:
            val = float(raw)
        except ValueError:
            raise _UsageError(f"parameter {key!r} has non-numeric value {raw!r}") from None
        if not math.isfinite(val):
            raise _UsageError(f"parameter {key!r} must be finite")
        out[key] = val
    return out


def parse_grid(text):
    """``"min:max:points"`` -> (min, max, points)."""
    if text is None:
        return None
    parts = text.split(":")
    if len(parts) != 3:
        raise _UsageError(f"grid {text!r} must be min:max:points")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        pts = int(parts[2])
    except ValueError:
        raise _UsageError(f"grid {text!r} must be min:max:points") from None
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise _UsageError("grid needs finite min < max")
    if pts < 2:
        raise _UsageError("grid needs at least 2 points")
    return lo, hi, pts


def _scalar(v):
    v = realify(v)
    if isinstance(v, complex) or np.iscomplexobj(v):
        v = complex(v)
        return [v.real, v.imag]
    return float(v)


def _vector(v):
    return [_scalar(x) for x in np.atleast_1d(v)]


def _emit(doc, out_path, stream):
    text = json.dumps(doc, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        stream.write(text + "\n")


# -- verbs -------------------------------------------------------------------------

def cmd_list(args, stream):
    specs = catalog.registry()
    if args.case:
        specs = {catalog.resolve(args.case).cli_id: catalog.resolve(args.case)}
    rows = []
    for spec in specs.values():
        inst = catalog.instantiate(spec.cli_id, n=1)
        dom = catalog.physical_domain(inst)
        rows.append({
            "id": spec.cli_id,
            "case": spec.case_id,
            "params": list(spec.param_names),
            "figure_params": spec.figure_params,
            "constraints": spec.constraints,
            "x_domain": list(dom["x"]) if dom["x"] is not None else None,
            "z_domain": list(dom["z"]),
            "weighted": inst.rho_z[1] != 0,
            "radial": inst.radial is not None,
            "algebraic_only": dom["algebraic_only"],
            "potential": spec.table,
        })
    if args.json:
        _emit(rows, None, stream)
        return EXIT_OK
    for r in rows:
        flags = ",".join(f for f, on in (("weighted", r["weighted"]), ("radial", r["radial"]),
                                         ("algebraic", r["algebraic_only"])) if on) or "-"
        dom = r["x_domain"] if r["x_domain"] is not None else r["z_domain"]
        stream.write(f"{r['id']:<9} {r['case']:<15} params={','.join(r['params']):<18} "
                     f"domain=({dom[0]:g},{dom[1]:g}) flags={flags:<16} {r['potential']}"
                     f"  [{r['constraints']}]\n")
    return EXIT_OK


def solve_document(inst, sols, s=1.0):
    cons = [qes_consistency_check(inst.form, sol.roots, sol.energy) for sol in sols]
    return {
        "case": inst.case_id,
        "n": inst.n,
        "params": dict(inst.params),
        "energy_shift": inst.energy_shift,
        "energies": [_scalar(sol.energy) for sol in sols],
        "roots": [_vector(sol.roots) for sol in sols],
        "bae_residuals": [float(sol.bae_residual) for sol in sols],
        "ode_residuals": [float(sol.ode_residual_max) for sol in sols],
        "consistency": [float(c.max_discrepancy) for c in cons],
        "pairing": [{"index": i, "energy": _scalar(sol.energy), "roots": _vector(sol.roots)}
                    for i, sol in enumerate(sols)],
        "tolerances": {k: TOLERANCES[k] * s for k in ("bae", "ode", "consistency")},
    }


def cmd_solve(args, stream):
    s = tol_scale()
    inst = catalog.instantiate(args.case, parse_params(args.param, args.case), args.n)
    sols = solve_spectrum(inst.form)
    doc = solve_document(inst, sols, s)
    tol = doc["tolerances"]
    ok = (all(r < tol["bae"] for r in doc["bae_residuals"])
          and all(r < tol["ode"] for r in doc["ode_residuals"])
          and all(r < tol["consistency"] for r in doc["consistency"]))
    doc["pass"] = ok
    _emit(doc, args.out, stream)
    return EXIT_OK if ok else EXIT_FAIL


def _format(v):
    """CSV field: shortest round-trip repr, empty for pole markers."""
    return "" if not np.isfinite(v) else repr(float(v))


def susy_columns(partner, xs):
    """Ordered {column: values} for the plot data of one partner pair.

    Values that cannot be evaluated (poles, r <= 0) are NaN.
    """
    case = partner.case
    cols = {}
    if case.algebraic_only:
        cols["z"] = xs
        cols["V1"] = _safe_eval(case.form.V1, xs)
        cols["V2"] = _safe_eval(partner.V2_z, xs)
        cols["phi_seed"] = _safe_eval(lambda z: partner.seed.poly(z), xs)
        cols["phi_other"] = _safe_eval(lambda z: partner.other.poly(z), xs)
        cols["phi_partner"] = _safe_eval(partner.phi2, xs)
        return cols
    cols["x"] = xs
    cols["V"] = _safe_eval(case.V_x, xs)
    cols["V2"] = _safe_eval(partner.V2_x, xs)
    for i, name in enumerate(("psi_seed", "psi_other", "psi_partner")):
        cols[name] = _safe_eval(lambda x, i=i: partner.wavefunctions(x)[i], xs)
    if case.radial is not None:
        rw = radial_wrap(partner)
        cols["V_S"] = _safe_eval(rw.V_S, xs)
        cols["V_S2"] = _safe_eval(rw.V_S2, xs)
        for i, name in enumerate(("psi_S_seed", "psi_S_other", "psi_S_partner")):
            cols[name] = _safe_eval(lambda x, i=i: rw.wavefunctions(x)[i], xs)
    return cols


def write_csv(cols, fh):
    """Header plus one row per grid point; the trailing ``pole`` column is 1
    when any value in the row is a pole marker (empty field)."""
    w = csv.writer(fh, lineterminator="\n")
    names = list(cols)
    w.writerow(names + ["pole"])
    for row in zip(*(cols[k] for k in names)):
        w.writerow([_format(v) for v in row] + [int(not np.all(np.isfinite(row)))])


def cmd_susy(args, stream):
    inst = catalog.instantiate(args.case, parse_params(args.param, args.case), args.n)
    grid = parse_grid(args.grid) or inst.default_grid
    if not inst.algebraic_only:
        dlo, dhi = inst.x_domain
        if grid[0] < dlo or grid[1] > dhi:
            raise _UsageError(f"grid {grid[0]:g}:{grid[1]:g} leaves the physical domain "
                              f"[{dlo:g}, {dhi:g}] of {inst.cli_id}")
    sols = solve_spectrum(inst.form)
    partner = build_partner(inst, sols, args.seed_index, args.other_index,
                            v2_sign=-1.0 if args.debug_flip_v2 else 1.0)
    xs = np.linspace(*grid[:2], int(grid[2]))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        cols = susy_columns(partner, xs)
    buf = io.StringIO()
    write_csv(cols, buf)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    if inst.algebraic_only:
        new, shared, scanned = [], [], False
    else:
        poles = partner_poles(partner, grid)
        new = [p.x for p in poles if p.kind == "new"]
        shared = [p.x for p in poles if p.kind == "shared"]
        scanned = True
    summary = {
        "case": inst.case_id,
        "n": inst.n,
        "params": dict(inst.params),
        "seed_index": partner.meta["seed_index"],
        "other_index": partner.meta["other_index"],
        "energies": [_scalar(sol.energy) for sol in sols],
        "seed_energy": _scalar(partner.seed.energy),
        "other_energy": _scalar(partner.other.energy),
        "gap": _scalar(partner.gap),
        "seed_roots": _vector(partner.seed.roots),
        "columns": list(cols) + ["pole"],
        "rows": int(xs.size),
        "csv": args.out,
        "singularity_scan": scanned,
        "new_poles": new,
        "shared_poles": shared,
    }
    if args.out:
        _emit(summary, None, stream)
    else:
        stream.write(buf.getvalue())
        sys.stderr.write(json.dumps(summary) + "\n")
    return EXIT_NEW_POLE if new else EXIT_OK


def cmd_verify(args, stream):
    inst = catalog.instantiate(args.case, parse_params(args.param, args.case), args.n)
    report = verify_case(inst, n=args.n, seed_index=args.seed_index,
                         other_index=args.other_index, grid=parse_grid(args.grid),
                         v2_sign=-1.0 if args.debug_flip_v2 else 1.0)
    if args.json or args.out:
        _emit(report.as_dict(), args.out, stream)
    if not args.json:
        for c in report.checks:
            mark = "PASS" if c.passed else "FAIL"
            stream.write(f"{mark} {c.name:<32} {c.max_residual:10.3e} < {c.tol:.1e}\n")
        stream.write(f"{'PASS' if report.passed else 'FAIL'} {inst.case_id} n={inst.n} "
                     f"new_poles={report.new_poles}\n")
    return EXIT_OK if report.passed else EXIT_FAIL


# -- entry point -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="qes", description="QES spectra, Bethe roots and SUSY partners.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    lp = sub.add_parser("list", help="show the case catalog")
    lp.add_argument("--case")
    lp.add_argument("--json", action="store_true")

    def common(sp, needs_pair):
        sp.add_argument("--case", required=True)
        sp.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
        sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--out")
        sp.add_argument("--json", action="store_true")
        if needs_pair:
            sp.add_argument("--seed-index", type=int, default=0)
            sp.add_argument("--other-index", type=int, default=None)
            sp.add_argument("--grid", metavar="MIN:MAX:POINTS")
            sp.add_argument("--debug-flip-v2", action="store_true",
                            help="flip the sign of the partner correction (self-test)")

    common(sub.add_parser("solve", help="spectrum and Bethe roots as JSON"), False)
    common(sub.add_parser("susy", help="partner potential and wavefunctions as CSV"), True)
    common(sub.add_parser("verify", help="run the verification suite"), True)
    return p


_VERBS = {"list": cmd_list, "solve": cmd_solve, "susy": cmd_susy, "verify": cmd_verify}


def _join_grid(argv):
    """Rewrite ``--grid -3:3:601`` as ``--grid=-3:3:601`` so a negative lower
    bound is not mistaken for an option."""
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--grid":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--grid={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_grid(argv))
    try:
        return _VERBS[args.verb](args, stream)
    except AlgebraicOnlyError as exc:
        sys.stderr.write(f"qes: {exc}\n")
        return EXIT_INPUT
    except QESError as exc:
        sys.stderr.write(f"qes: {exc}\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(f"qes: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
