"""High-temperature three-dimensional effective theory for the static modes.

Quantities here are 3d free-energy densities; multiplying by T gives the
4d free energy per unit area.  That multiplication happens only in
:func:`match_highT`.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .domain import EftCoefficients, Regime, classify_regime
from .eft import SignConvention, two_loop_highT
from .errors import DomainError
from .propagator import gauge_kernel_value, integrated_coincident_kernel
from .specfun import zeta

__all__ = [
    "MatchReport",
    "RegimeWarning",
    "unit_operator_f",
    "f0_3d",
    "f0_3d_quad",
    "f1_3d",
    "f1_3d_kernel",
    "match_highT",
]

RESIDUAL_FLOOR = 1e-300


class RegimeWarning(UserWarning):
    """A high-temperature construction was applied outside its regime."""


@dataclass(frozen=True)
class MatchReport:
    lhs: float
    rhs: float
    residual: float
    convention: SignConvention
    beta: float = math.nan
    L: float = math.nan
    regime: str = ""

    def to_dict(self):
        return {
            "beta": self.beta,
            "L": self.L,
            "regime": self.regime,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "convention": self.convention.value,
        }


def unit_operator_f(beta, L, b1):
    """Unit-operator coefficient -pi^2 L/(45 beta^3) (1 - b1) + zeta(3)/(2 pi beta^2)."""
    if not (beta > 0 and L > 0):
        raise DomainError("beta and L must be positive")
    return -math.pi**2 * L / (45.0 * beta**3) * (1.0 - b1) + zeta(3) / (2.0 * math.pi * beta**2)


def f0_3d(L):
    """One-loop 3d plate free energy -zeta(3) / (8 pi L^2)."""
    if not L > 0:
        raise DomainError("L must be positive")
    return -zeta(3) / (8.0 * math.pi * L**2)


def f0_3d_quad(L):
    """(1/2pi) int_0^inf k log(1 - e^{-2kL}) dk by quadrature (both polarisations)."""

    def f(k):
        return k * math.log(-math.expm1(-2.0 * k * L)) if k > 0 else 0.0

    val, _ = integrate.quad(f, 0.0, np.inf, epsabs=0.0, epsrel=1e-13, limit=200)
    return val / (2.0 * math.pi)


def f1_3d(L, e1, e2):
    """Order-alpha 3d correction (e1 + e2) zeta(3) / (8 pi L^2)."""
    if not L > 0:
        raise DomainError("L must be positive")
    return (e1 + e2) * zeta(3) / (8.0 * math.pi * L**2)


def f1_3d_kernel(L, e1, e2):
    """Same quantity assembled from the per-mode plate kernels.

    e1 * (1/2pi) int gamma K(gamma) dgamma - e2 * (1/2pi) int gamma K_gauge(gamma) dgamma,
    with K the integrated coincident kernel and K_gauge = (1 - d) K.
    """

    def moment(kernel):
        val, _ = integrate.quad(
            lambda g: g * kernel(g, L) if g > 0 else 0.0,
            0.0,
            np.inf,
            epsabs=0.0,
            epsrel=1e-13,
            limit=200,
        )
        return val / (2.0 * math.pi)

    return e1 * moment(integrated_coincident_kernel) - e2 * moment(gauge_kernel_value)


def match_highT(sys, conv=SignConvention.as_printed, coeffs=None, warn=True):
    """Compare T (f + F0_3d + F1_3d) with the published high-T free energy.

    ``coeffs`` overrides the leading-order matching e1 = e2 = b1 (for
    instance to switch the correction off).  The comparison is purely
    algebraic, so the sign convention only labels the report.
    """
    conv = SignConvention.parse(conv)
    regime = classify_regime(sys)
    if warn and regime is not Regime.HighT:
        warnings.warn(
            f"match_highT at beta/L = {sys.beta / sys.L:g} is outside the high-T regime",
            RegimeWarning,
            stacklevel=2,
        )
    if coeffs is None:
        coeffs = EftCoefficients.from_system(sys)
    b1 = coeffs.b1
    T = 1.0 / sys.beta
    lhs = T * math.fsum(
        [
            unit_operator_f(sys.beta, sys.L, b1),
            f0_3d(sys.L),
            f1_3d(sys.L, coeffs.e1, coeffs.e2),
        ]
    )
    # the reference carries the same b1 as the 3d side
    alpha_eff = b1 * 32.0 * sys.m * sys.L / 3.0
    rhs = two_loop_highT(sys.beta, sys.L, sys.m, alpha_eff)
    residual = abs(lhs - rhs) / max(abs(rhs), RESIDUAL_FLOOR)
    return MatchReport(lhs, rhs, residual, conv, sys.beta, sys.L, regime.value)

