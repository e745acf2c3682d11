import math

import numpy as np
import pytest

from qes.catalog import instantiate
from qes.errors import InvalidInputError
from qes.odeform import OdeStandardForm, c_constraints, ode_residual, qes_consistency_check
from qes.poly import poly_from_roots

SEXTIC = OdeStandardForm([0, 4], [2, -4, -4], [1, -4, 0], 1)
MORSE1 = OdeStandardForm([0, 0, 1], [2, 3, -2], [1, -2], 1)
R_SEXTIC = -(1 + math.sqrt(3)) / 2


def test_catalog_builds_the_same_forms():
    for form, case, params in ((SEXTIC, "sextic6", dict(a=1, b=1)),
                               (MORSE1, "morse1", dict(a=1, b=1, c=1, alpha=1))):
        f = instantiate(case, params, 1).form
        np.testing.assert_allclose(f.a, form.a)
        np.testing.assert_allclose(f.b, form.b)
        np.testing.assert_allclose(f.v1, form.v1)


def test_c_constraints_sextic():
    c2, c1, c0 = c_constraints(SEXTIC, [R_SEXTIC])
    assert c2 == pytest.approx(0, abs=1e-14)
    assert c1 == pytest.approx(4)
    assert c0 == pytest.approx(4 * R_SEXTIC + 4)
    assert c0 == pytest.approx((3 - 2 * math.sqrt(3)) - 1)


def test_c_constraints_n0():
    assert c_constraints(SEXTIC.with_n(0), []) == pytest.approx((0, 0, 0))


def test_c_constraints_morse1():
    c2, c1, c0 = c_constraints(MORSE1, [2.0])
    assert (c1, c0) == pytest.approx((2.0, 1.0))


def test_c_constraints_root_count():
    with pytest.raises(InvalidInputError):
        c_constraints(SEXTIC, [1.0, 2.0])


def test_ode_residual_sextic():
    p = poly_from_roots([R_SEXTIC])
    assert abs(ode_residual(SEXTIC, 3 - 2 * math.sqrt(3), p, 0.7)) < 1e-12


def test_ode_residual_n0():
    form = instantiate("sextic6", {"a": 1, "b": 1}, 0).form
    assert ode_residual(form, form.v1[0].real, poly_from_roots([]), 0.3) == 0.0


def test_ode_residual_periodic():
    form = instantiate("periodic10", {"a": 1, "alpha": 1}, 1).form
    s = math.sqrt(17)
    p = poly_from_roots([-(1 + s) / 4])
    assert abs(ode_residual(form, (1 - s) / 2, p, 0.3)) < 1e-12


def test_consistency_passes_on_eigenpair():
    rep = qes_consistency_check(SEXTIC, [R_SEXTIC], 3 - 2 * math.sqrt(3))
    assert rep.passed and rep.max_discrepancy < 1e-10


def test_consistency_flags_wrong_root():
    rep = qes_consistency_check(SEXTIC, [0.0], 1.0)
    assert not rep.passed
    assert set(rep.failed) & {"c1", "c0"}


def test_consistency_n0():
    form = instantiate("pt5", None, 0).form
    assert qes_consistency_check(form, [], form.v1[0].real).passed


def test_form_validation():
    with pytest.raises(InvalidInputError):
        OdeStandardForm([0, 0, 0], [1], [0], 1)
    with pytest.raises(InvalidInputError):
        OdeStandardForm([1], [1], [np.inf], 1)
    with pytest.raises(InvalidInputError):
        OdeStandardForm([1, 0, 0, 0, 0, 1], [1], [0], 1)
    with pytest.raises(InvalidInputError):
        OdeStandardForm([1], [1], [0], -1)


def test_perturbed_is_relative():
    f = MORSE1.perturbed("b", 1, 1e-3)
    assert f.b[1] == pytest.approx(3 * (1 + 1e-3))
    assert MORSE1.perturbed("a", 4, 1e-3).a[4] == pytest.approx(1e-3)


@pytest.mark.parametrize("case", ["morse1", "pt4", "coulomb9", "lame11"])
def test_every_eigenpair_certified(case):
    from qes.bethe import solve_spectrum
    form = instantiate(case, None, 3).form
    for s in solve_spectrum(form):
        assert qes_consistency_check(form, s.roots, s.energy).max_discrepancy < 1e-8
        zs = np.linspace(0.1, 2.0, 50)
        assert np.max(ode_residual(form, s.energy, s.poly, zs)) < 1e-9
