import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from casimir_eft.errors import DomainError, UnsupportedDimensionError
from casimir_eft.propagator import (
    boundary_kernel,
    coincident_kernel_quad,
    dirichlet_check,
    gauge_kernel_value,
    image_bracket,
    integrated_coincident_kernel,
    neumann_bracket_sign,
    neumann_check,
    neumann_residual,
    scalar_propagator,
)


@st.composite
def kernel_inputs(draw):
    gamma = draw(st.floats(0.05, 20.0))
    L = draw(st.floats(0.1, 5.0))
    z = draw(st.floats(0.0, 1.0)) * L
    zp = draw(st.floats(0.0, 1.0)) * L
    return gamma, L, z, zp


def test_boundary_kernel_hand_value():
    assert boundary_kernel(1.0, 1.0, 0.5, 0.5) == pytest.approx(2 - 2 / math.e, rel=1e-15)


def _bracket_naive(g, L, z, zp):
    e = math.exp
    return e(g * L) * (e(-g * (abs(z) + abs(zp))) + e(-g * (abs(z - L) + abs(zp - L)))) - e(
        -g * (abs(z) + abs(zp - L))
    ) - e(-g * (abs(z - L) + abs(zp)))


@given(kernel_inputs())
def test_boundary_kernel_matches_naive_form(inp):
    g, L, z, zp = inp
    assert boundary_kernel(g, L, z, zp) == pytest.approx(_bracket_naive(g, L, z, zp), rel=1e-12, abs=1e-300)


@given(kernel_inputs())
def test_boundary_kernel_symmetries(inp):
    g, L, z, zp = inp
    b = boundary_kernel(g, L, z, zp)
    assert boundary_kernel(g, L, zp, z) == pytest.approx(b, rel=1e-14)
    assert boundary_kernel(g, L, L - z, L - zp) == pytest.approx(b, rel=1e-12)


@given(kernel_inputs())
def test_boundary_kernel_positive_and_bounded(inp):
    g, L, z, zp = inp
    if 0 < z < L and 0 < zp < L:
        scaled = image_bracket(g, L, z, zp, scaled=True)
        assert scaled >= 0.0
        assert scaled <= 2.0


def test_bracket_no_overflow_at_large_gamma_L():
    val = image_bracket(1000.0, 1.0, 0.5, 0.5, scaled=True)
    assert math.isfinite(val)
    assert math.isfinite(scalar_propagator(2000.0, 1.0, 0.3, 0.7, -1))


def test_vectorized_bracket():
    z = np.linspace(0.0, 1.0, 5)
    out = image_bracket(1.0, 1.0, z, z)
    assert out.shape == (5,)
    assert out[2] == pytest.approx(2 - 2 / math.e)


def test_position_domain():
    with pytest.raises(DomainError):
        boundary_kernel(1.0, 1.0, 1.5, 0.5)
    with pytest.raises(DomainError):
        boundary_kernel(-1.0, 1.0, 0.5, 0.5)


def test_integrated_kernel_values():
    assert integrated_coincident_kernel(1.0, 1.0) == pytest.approx(1 / (math.e**2 - 1), rel=1e-15)
    assert integrated_coincident_kernel(1.0, 1.0) == pytest.approx(0.15651764, rel=1e-7)
    assert integrated_coincident_kernel(40.0, 1.0) == pytest.approx(40 * math.exp(-80), rel=1e-12)
    assert integrated_coincident_kernel(1e4, 1.0) == 0.0


@pytest.mark.parametrize("gl", np.geomspace(0.1, 20.0, 9))
@pytest.mark.parametrize("sign", [-1, 1])
def test_kernel_closed_form_vs_z_quadrature(gl, sign):
    L = 1.3
    gamma = gl / L
    assert coincident_kernel_quad(gamma, L, sign) == pytest.approx(
        integrated_coincident_kernel(gamma, L), abs=1e-10
    )


def test_gauge_kernel():
    assert gauge_kernel_value(1.0, 1.0) == pytest.approx(-0.15651764, rel=1e-7)
    with pytest.raises(UnsupportedDimensionError):
        gauge_kernel_value(1.0, 1.0, d=3)


@given(st.floats(0.01, 50.0), st.floats(0.1, 5.0))
def test_gauge_plus_scalar_vanishes(gamma, L):
    assert gauge_kernel_value(gamma, L, 2) + integrated_coincident_kernel(gamma, L) == 0.0


def test_neumann_sign_is_plus():
    assert neumann_bracket_sign() == 1


def test_neumann_check_small():
    assert neumann_check(1.0, 1.0, 1e-6) < 1e-4
    assert neumann_check(1.0, 1.0, 1e-6, at="right") < 1e-4


def test_neumann_residual_linear_in_eps():
    r = [neumann_check(1.0, 1.0, eps) for eps in (1e-4, 1e-5, 1e-6)]
    assert r[0] / r[1] == pytest.approx(10.0, rel=0.05)
    assert r[1] / r[2] == pytest.approx(10.0, rel=0.05)


def test_printed_sign_is_dirichlet_not_neumann():
    assert dirichlet_check(1.0, 1.0, sign=-1) < 1e-15
    assert dirichlet_check(1.0, 1.0, sign=1) > 0.1
    assert neumann_residual(1.0, 1.0, 1e-6, -1) > 1e3


def test_propagator_symmetric_in_arguments():
    for s in (-1, 1):
        assert scalar_propagator(1.7, 1.0, 0.2, 0.9, s) == pytest.approx(
            scalar_propagator(1.7, 1.0, 0.9, 0.2, s), rel=1e-14
        )


def test_neumann_residual_rejects_large_eps():
    with pytest.raises(DomainError):
        neumann_residual(1.0, 1.0, 0.5, 1)
