import math

import pytest

from casimir_eft.domain import ALPHA_QED, PlateSystem
from casimir_eft.audit import default_grid
from casimir_eft.errors import DomainError
from casimir_eft.thermo import (
    DerivativeConfig,
    Scheme,
    casimir_force,
    central_difference,
    closed_form_entropy,
    closed_form_force,
    entropy,
)

ZETA3 = 1.2020569031595942854


def test_low_T_free_force():
    sys = PlateSystem(L=1.0, beta=50.0, m=1000.0, alpha=0.0)
    for sub in (False, True):
        f = casimir_force(sys, dcfg=DerivativeConfig(subtract_bulk=sub))
        assert f == pytest.approx(-math.pi**2 / 240, rel=1e-6)


def test_high_T_free_force_bulk_subtracted():
    sys = PlateSystem(L=1.0, beta=0.1, m=1000.0, alpha=0.0)
    f = casimir_force(sys, dcfg=DerivativeConfig(subtract_bulk=True))
    assert f == pytest.approx(-ZETA3 / (4 * math.pi * 0.1), abs=1e-6)


def test_force_fd_vs_closed_form():
    sys = PlateSystem(L=1.0, beta=50.0, m=1000.0, alpha=ALPHA_QED)
    step = 1e-5
    fd = casimir_force(sys, dcfg=DerivativeConfig(step_rel=step))
    exact = closed_form_force(sys)
    assert abs(fd - exact) / abs(exact) < step**2 * 10


def test_force_closed_form_switch():
    sys = PlateSystem(L=1.0, beta=50.0)
    assert casimir_force(sys, dcfg=DerivativeConfig(closed_form=True)) == closed_form_force(sys)


def test_low_T_entropy_vanishes():
    sys = PlateSystem(L=1.0, beta=50.0, m=1000.0, alpha=ALPHA_QED)
    assert abs(entropy(sys)) < 1e-7


def test_high_T_free_entropy():
    sys = PlateSystem(L=1.0, beta=0.1, m=1000.0, alpha=0.0)
    expected = 4 * math.pi**2 / (45 * 0.1**3) - 3 * ZETA3 / (2 * math.pi * 0.01) + ZETA3 / (8 * math.pi)
    assert expected == pytest.approx(819.952008, rel=1e-8)
    assert entropy(sys) == pytest.approx(expected, rel=1e-5)
    assert closed_form_entropy(sys) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("ratio", [8.0, 10.0, 20.0])
def test_high_T_entropy_closed_form(ratio):
    sys = PlateSystem(L=1.0, beta=1.0 / ratio, m=1000.0, alpha=ALPHA_QED)
    assert entropy(sys) == pytest.approx(closed_form_entropy(sys), rel=1e-5)


def test_entropy_non_negative_on_default_grid():
    for beta, L, m, alpha in default_grid():
        assert entropy(PlateSystem(L=L, beta=beta, m=m, alpha=alpha)) >= -1e-9


@pytest.mark.parametrize(
    "sys",
    [
        PlateSystem(L=1.0, beta=0.1, m=1000.0, alpha=0.0),
        PlateSystem(L=2.0, beta=0.2, m=1000.0, alpha=ALPHA_QED),
        PlateSystem(L=1.0, beta=50.0, m=1000.0, alpha=ALPHA_QED),
    ],
)
def test_central_4_more_accurate(sys):
    exact = closed_form_force(sys)
    e2 = abs(casimir_force(sys, dcfg=DerivativeConfig(step_rel=1e-4)) - exact)
    e4 = abs(casimir_force(sys, dcfg=DerivativeConfig(step_rel=1e-4, scheme=Scheme.central_4)) - exact)
    assert e4 * 10 <= e2


def test_central_difference_orders():
    f = math.exp
    errs2 = [abs(central_difference(f, 1.0, h) - math.e) for h in (1e-2, 1e-3)]
    errs4 = [abs(central_difference(f, 1.0, h, Scheme.central_4) - math.e) for h in (1e-1, 1e-2)]
    assert errs2[0] / errs2[1] == pytest.approx(100, rel=0.05)
    assert errs4[0] / errs4[1] == pytest.approx(1e4, rel=0.05)


def test_step_collapse():
    with pytest.raises(DomainError):
        central_difference(math.exp, 1.0, 1e-300)


@pytest.mark.parametrize("step", [0.0, -1e-5, 0.05])
def test_derivative_config_validation(step):
    with pytest.raises(DomainError):
        DerivativeConfig(step_rel=step)


def test_closed_forms_reject_crossover():
    sys = PlateSystem(L=1.0, beta=1.0)
    with pytest.raises(DomainError):
        closed_form_force(sys)
    with pytest.raises(DomainError):
        closed_form_entropy(sys)
