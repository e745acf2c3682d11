"""Acceptance criteria 1-8.

Each criterion is one test. Its outcome is recorded in ``conftest.ACCEPTANCE``
and printed as a single PASS/FAIL line in the terminal summary (and on stdout
when run with ``-s``).
"""

import math
import time

import numpy as np

from qes.bethe import solve_spectrum
from qes.catalog import instantiate
from qes.odeform import qes_consistency_check
from qes.verify import mutation_sweep, verify_case

import conftest
from conftest import FIGURE, FROZEN, X_CASES, WEIGHTED, RADIAL

N10 = {"morse2": dict(a=1, b=1, d=1, alpha=1),
       "coulomb8": dict(a=1, b=1, c=1, l=1, d=2)}
LAME = {"lame11": dict(a1=1, a2=2, a3=3, k1=0, k2=0, k3=0),
        "lame12": dict(g2=4, g3=0, mu=1)}
IDENTITY_TOL = {"annihilation": 1e-11, "mapping": 1e-11, "reverse_mapping": 1e-8,
                "factorization": 1e-8, "intertwining": 1e-7, "partner_ode": 1e-8}

# eigenstates produced by criteria 1, 5 and 6, collected for criterion 7
PRODUCED = {}


def _record(k, problems, detail):
    ok = not problems
    text = detail if ok else "; ".join(problems[:5])
    conftest.ACCEPTANCE[k] = (ok, text)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {text}")
    assert ok, text


def _timed(fn, repeats=3):
    """Best wall time of ``repeats`` calls (the first call also warms caches)."""
    best, out = math.inf, None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def test_criterion_1_closed_form_reproduction():
    problems, worst = [], 0.0
    for case in X_CASES:
        inst = instantiate(case, FIGURE[case], 1)
        sols, dt = _timed(lambda: solve_spectrum(instantiate(case, FIGURE[case], 1).form))
        PRODUCED[(case, 1)] = (inst.form, sols)
        if dt >= 0.05:
            problems.append(f"{case}: runtime {dt * 1e3:.1f} ms")
        if len(sols) != 2:
            problems.append(f"{case}: {len(sols)} states")
            continue
        got = sorted(float(np.real(s.energy)) for s in sols)
        want = sorted(e for e, _ in FROZEN[case])
        for g, w in zip(got, want):
            worst = max(worst, _rel(g, w))
            if _rel(g, w) > 1e-10:
                problems.append(f"{case}: energy {g!r} vs {w!r}")
        # pairing: each energy carries its own root
        for e, r in FROZEN[case]:
            s = min(sols, key=lambda s: abs(s.energy - e))
            rr = complex(s.roots[0])
            worst = max(worst, _rel(rr, r))
            if abs(rr.imag) > 1e-10 * abs(r) or _rel(rr.real, r) > 1e-10:
                problems.append(f"{case}: E={e} root {rr} vs {r}")
    _record(1, problems, f"10 cases, max rel deviation {worst:.1e}")


def test_criterion_2_identity_suite():
    problems, worst = [], {k: 0.0 for k in IDENTITY_TOL}
    for case in X_CASES:
        rep = verify_case(case, FIGURE[case], 1, oracle=False)
        for name, tol in IDENTITY_TOL.items():
            c = rep.get(name)
            worst[name] = max(worst[name], c.max_residual)
            if not c.max_residual <= tol:
                problems.append(f"{case}: {name} {c.max_residual:.2e} > {tol:g}")
    _record(2, problems, ", ".join(f"{k} {v:.1e}" for k, v in worst.items()))


def test_criterion_3_general_vs_closed_form():
    problems, worst, count = [], 0.0, 0
    for case in X_CASES:
        rep = verify_case(case, FIGURE[case], 1)
        checks = [c for c in rep.checks if c.name.startswith("oracle_")]
        names = {c.name for c in checks}
        for need in ("oracle_V2_z", "oracle_V2_x", "oracle_psi2_x"):
            if need not in names:
                problems.append(f"{case}: {need} missing")
        for c in checks:
            count += 1
            if c.name.startswith("oracle_spectrum"):
                continue
            worst = max(worst, c.max_residual)
            if not c.max_residual <= 1e-9:
                problems.append(f"{case}: {c.name} {c.max_residual:.2e}")
    _record(3, problems, f"{count} oracle checks, max field deviation {worst:.1e}")


def test_criterion_4_finite_difference():
    problems, worst = [], 0.0
    for case in X_CASES:
        rep = verify_case(case, FIGURE[case], 1, oracle=False)
        fd = [c for c in rep.checks if c.name.startswith("fd_")]
        names = {c.name for c in fd}
        if not {"fd_seed", "fd_other", "fd_partner"} <= names:
            problems.append(f"{case}: FD checks missing")
        if case in RADIAL and "fd_radial_partner" not in names:
            problems.append(f"{case}: radial FD checks missing")
        for c in fd:
            worst = max(worst, c.max_residual)
            if not c.max_residual <= 1e-4:
                problems.append(f"{case}: {c.name} {c.max_residual:.2e}")
    assert set(WEIGHTED) <= set(X_CASES)
    _record(4, problems, f"max FD residual {worst:.1e} (weighted {len(WEIGHTED)}, radial {len(RADIAL)})")


def test_criterion_5_n10():
    problems, details = [], []
    for case, params in N10.items():
        inst = instantiate(case, params, 10)
        rep, dt = _timed(lambda: verify_case(case, params, 10, oracle=False), repeats=2)
        sols = solve_spectrum(inst.form)
        PRODUCED[(case, 10)] = (inst.form, sols)
        E = np.array([s.energy for s in sols])
        if len(E) != 11:
            problems.append(f"{case}: {len(E)} energies")
        if np.max(np.abs(E.imag)) > 1e-10 * (1 + np.max(np.abs(E.real))):
            problems.append(f"{case}: complex energies")
        if len(E) > 1 and np.min(np.diff(np.sort(E.real))) <= 1e-8:
            problems.append(f"{case}: degenerate energies")
        bae = max(s.bae_residual for s in sols)
        if not bae < 1e-8:
            problems.append(f"{case}: BAE residual {bae:.1e}")
        partner_states = 1 + len({c.name.split(":")[0] for c in rep.checks if ":" in c.name})
        if partner_states != 10:
            problems.append(f"{case}: {partner_states} partner states checked")
        ident = [c for c in rep.checks
                 if c.name.split(":")[-1] in IDENTITY_TOL or c.name == "b_forms"]
        bad = [c.name for c in ident if not c.passed]
        if bad:
            problems.append(f"{case}: identity failures {bad[:3]}")
        if rep.new_poles:
            problems.append(f"{case}: new poles {rep.new_poles[:3]}")
        if dt >= 1.0:
            problems.append(f"{case}: runtime {dt:.2f} s")
        details.append(f"{case} {dt * 1e3:.0f} ms, BAE {bae:.1e}")
    _record(5, problems, "; ".join(details))


def _lame11_eps(a1, a2, a3, k1, k2, k3):
    K = math.sqrt((a1 * (k2 + k3 + 1) + a2 * (k1 + k3 + 1) + a3 * (k1 + k2 + 1)) ** 2
                  - (2 * k1 + 2 * k2 + 2 * k3 + 3)
                  * (a1 * (2 * a2 * k3 + a2 + 2 * a3 * k2 + a3) + a2 * a3 * (2 * k1 + 1)))
    base = (a1 * (k2 * (2 * k3 + 3) + 3 * k3 + 2) + 2 * (a2 + a3)
            + (2 * k1 + 3) * (a2 * k3 + a3 * k2) + 3 * k1 * (a2 + a3))
    return [base - 2 * K, base + 2 * K]


def test_criterion_6_lame():
    problems, worst = [], 0.0
    p = LAME["lame11"]
    inst = instantiate("lame11", p, 1)
    sols = solve_spectrum(inst.form)
    PRODUCED[("lame11", 1)] = (inst.form, sols)
    got = sorted(float(np.real(s.energy)) for s in sols)
    for g, w in zip(got, _lame11_eps(**p)):
        worst = max(worst, _rel(g, w))
        if _rel(g, w) > 1e-10:
            problems.append(f"lame11: {g!r} vs {w!r}")
    if len(got) != 2:
        problems.append(f"lame11: {len(got)} states")

    p = LAME["lame12"]
    inst = instantiate("lame12", p, 1)
    sols = solve_spectrum(inst.form)
    PRODUCED[("lame12", 1)] = (inst.form, sols)
    e1 = math.sqrt(3 * p["g2"]) / 2 * (2 * p["mu"] + 1)
    got = sorted(float(np.real(s.energy)) for s in sols)
    for g, w in zip(got, [-e1, e1]):
        worst = max(worst, _rel(g, w))
        if _rel(g, w) > 1e-10:
            problems.append(f"lame12: {g!r} vs {w!r}")
    r0 = math.sqrt(p["g2"]) / (2 * math.sqrt(3))
    roots = sorted(float(np.real(s.roots[0])) for s in sols)
    for g, w in zip(roots, [-r0, r0]):
        worst = max(worst, _rel(g, w))
        if _rel(g, w) > 1e-10:
            problems.append(f"lame12: root {g!r} vs {w!r}")
    _record(6, problems, f"max rel deviation {worst:.1e}")


def test_criterion_7_consistency():
    # criteria 1, 5 and 6 populate PRODUCED; recompute anything missing so
    # this criterion also runs in isolation
    for case in X_CASES:
        PRODUCED.setdefault((case, 1), None)
    for case in N10:
        PRODUCED.setdefault((case, 10), None)
    for case in LAME:
        PRODUCED.setdefault((case, 1), None)
    problems, worst, count = [], 0.0, 0
    for (case, n), entry in sorted(PRODUCED.items()):
        if entry is None:
            params = N10[case] if n == 10 else LAME.get(case, FIGURE.get(case))
            form = instantiate(case, params, n).form
            entry = (form, solve_spectrum(form))
        form, sols = entry
        for s in sols:
            count += 1
            d = qes_consistency_check(form, s.roots, s.energy).max_discrepancy
            worst = max(worst, d)
            if not d <= 1e-8:
                problems.append(f"{case} n={n} E={s.energy:.6g}: {d:.1e}")
    _record(7, problems, f"{count} eigenstates, max discrepancy {worst:.1e}")


def test_criterion_8_mutation_sensitivity():
    problems, total = [], 0
    for case in list(X_CASES) + list(LAME):
        for m in mutation_sweep(case, LAME.get(case, FIGURE.get(case))):
            total += 1
            if not m.detected:
                problems.append(f"{case}: {m.which}[{m.k}] undetected")
    _record(8, problems, f"{total} single-coefficient mutations, all detected")
