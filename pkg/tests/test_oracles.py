"""Closed-form n = 1 oracles against frozen symbolic values."""

import math

import numpy as np
import pytest

from qes.bethe import solve_spectrum
from qes.catalog import closed_form_oracle, instantiate
from qes.errors import InvalidInputError
from qes.oracles import oracle_for
from qes.susy import build_partner
from qes.verify import oracle_crosscheck

from conftest import FIGURE, FROZEN

GENERIC = {
    "morse1": dict(a=0.7, b=1.3, c=0.4, alpha=1.6),
    "morse2": dict(a=-2, b=0.7, d=1.3, alpha=0.8),
    "morse3": dict(a=-0.8, b=1.2, d=0.6, alpha=0.7),
    "pt4": dict(a=1.3, c=0.6, alpha=0.9, p=0),
    "pt5": dict(a=0.8, b=1.4, alpha=1.2, p=1),
    "sextic6": dict(a=1.4, b=1.8),
    "sextic7": dict(a=1.5, b=0.8, c=0.7, l=1, d=3),
    "coulomb8": dict(a=1.5, b=-0.7, c=0.6, l=1, d=3),
    "coulomb9": dict(a=0.7, b=2.5, c=9, l=2, d=-3),
    "periodic10": dict(a=0.7, alpha=1.3),
    "lame11": dict(a1=0.5, a2=1.7, a3=-2.2, k1=1, k2=0, k3=1),
    "lame12": dict(g2=3, g3=0.7, mu=1.6),
}


def test_frozen_values_match_closed_forms():
    s3 = math.sqrt(3)
    assert [e for e, _ in FROZEN["morse2"]] == pytest.approx([-6 - math.sqrt(48), -6 + math.sqrt(48)])
    assert [e for e, _ in FROZEN["sextic6"]] == pytest.approx([3 - 2 * s3, 3 + 2 * s3])
    assert [e for e, _ in FROZEN["pt5"]] == pytest.approx([-2 - math.sqrt(113), -2 + math.sqrt(113)])
    assert [e for e, _ in FROZEN["periodic10"]] == pytest.approx(
        [(1 - math.sqrt(17)) / 2, (1 + math.sqrt(17)) / 2])
    assert FROZEN["lame12"][0][0] == pytest.approx(-math.sqrt(3 * 4) / 2 * 3)
    assert sorted(r for _, r in FROZEN["lame12"]) == pytest.approx([-1 / s3, 1 / s3])


@pytest.mark.parametrize("case", list(FIGURE))
def test_oracle_reproduces_frozen(case):
    o = oracle_for(instantiate(case, FIGURE[case], 1))
    E, R = zip(*FROZEN[case])
    np.testing.assert_allclose(sorted(np.real(o.energies)), sorted(E), rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(sorted(np.real(o.roots)), sorted(R), rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("case", list(FIGURE))
def test_engine_pairing_matches_frozen(case):
    sols = solve_spectrum(instantiate(case, FIGURE[case], 1).form)
    got = [(float(np.real(s.energy)), float(np.real(s.roots[0]))) for s in sols]
    for (e, r), (fe, fr) in zip(got, FROZEN[case]):
        assert e == pytest.approx(fe, rel=1e-10, abs=1e-12)
        assert r == pytest.approx(fr, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("case", list(FIGURE))
def test_oracle_seed_is_lowest_state(case):
    inst = instantiate(case, FIGURE[case], 1)
    o = oracle_for(inst)
    assert o.seed_root == pytest.approx(FROZEN[case][0][1], rel=1e-10)


@pytest.mark.parametrize("case", list(GENERIC))
def test_oracle_fields_at_generic_parameters(case):
    inst = instantiate(case, GENERIC[case], 1)
    sols = solve_spectrum(inst.form)
    checks = oracle_crosscheck(inst, build_partner(inst, sols), sols)
    names = {c.name for c in checks}
    assert {"oracle_phi2", "oracle_V2_z"} <= names
    if not inst.algebraic_only:
        assert {"oracle_V2_x", "oracle_psi2_x"} <= names
    assert all(c.passed for c in checks), [c.as_dict() for c in checks if not c.passed]


def test_oracle_requires_n1():
    with pytest.raises(InvalidInputError):
        oracle_for(instantiate("morse1", None, 2))
    assert closed_form_oracle(instantiate("morse1", None, 3)) is None


def test_pt5_oracle_only_for_p1():
    assert closed_form_oracle(instantiate("pt5", dict(p=0), 1)) is None
    assert closed_form_oracle(instantiate("pt5", dict(p=1), 1)) is not None


def test_lame11_energy_formula_with_k():
    # k = (1, 0, 1) sector; energies are the shifted epsilon values
    inst = instantiate("lame11", GENERIC["lame11"], 1)
    o = oracle_for(inst)
    E = [s.energy for s in solve_spectrum(inst.form)]
    np.testing.assert_allclose(sorted(np.real(o.energies)), E, rtol=1e-10)
