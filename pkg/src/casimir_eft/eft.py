"""Order-alpha correction in the four-dimensional effective theory.

The boundary operator b1 (n.F)^2 shifts the free energy by

    F1 = F1a + F1b,
    F1a = -+ b1 pi^2 L / (45 beta^4)          (bulk propagator, exact at all T)
    F1b = b1 * 2 L * S(beta, L)              (plate part, numeric)

The sign of F1a is the one point on which the published low- and
high-temperature formulas cannot both hold; it is therefore an explicit
switch, :class:`SignConvention`, defaulting to the printed minus sign.
"""

import enum
import math

from .domain import Regime, b1_coefficient, classify_regime, validate
from .errors import DomainError
from .freefield import FreeEnergyResult, Method, casimir_lowT_free, free_energy_F0
from .modesum import SumConfig, inter_sum, plate_thermal_sum, plate_vacuum_closed
from .specfun import zeta

__all__ = [
    "SignConvention",
    "f1a",
    "f1b",
    "f1b_lowT_closed",
    "f1b_highT_closed",
    "two_loop_lowT",
    "two_loop_highT",
    "two_loop_highT_alpha",
    "closed_form_regime",
    "plate_decomposition",
    "total_free_energy",
]


class SignConvention(enum.Enum):
    """``as_printed``: F1a = -b1 pi^2 L/45 beta^4; ``reconciled`` flips it."""

    as_printed = "as_printed"
    reconciled = "reconciled"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            raise DomainError(f"unknown sign convention {value!r}") from None


def _pos(**kw):
    for k, v in kw.items():
        if not v > 0:
            raise DomainError(f"{k} must be positive, got {v!r}")


def f1a(beta, L, b1, conv=SignConvention.as_printed):
    """Bulk-propagator part of the order-alpha correction."""
    _pos(beta=beta, L=L)
    conv = SignConvention.parse(conv)
    sign = -1.0 if conv is SignConvention.as_printed else 1.0
    return sign * b1 * math.pi**2 * L / (45.0 * beta**4)


def f1b(beta, L, b1, cfg=None):
    """Plate-propagator part, b1 * 2L * S(beta, L).

    Returns
    -------
    (value, error_bound)
    """
    s = inter_sum(beta, L, cfg)
    scale = b1 * 2.0 * L
    return scale * s.value, abs(scale) * s.error_bound


def f1b_lowT_closed(beta, L, b1):
    """b1 pi^2 / (240 L^3) + b1 pi^2 L / (45 beta^4); exponentially accurate for beta >> L."""
    _pos(beta=beta, L=L)
    return b1 * math.pi**2 / (240.0 * L**3) + b1 * math.pi**2 * L / (45.0 * beta**4)


def f1b_highT_closed(beta, L, b1):
    """Static-mode value b1 zeta(3) / (4 pi beta L^2)."""
    _pos(beta=beta, L=L)
    return b1 * zeta(3) / (4.0 * math.pi * beta * L**2)


def plate_decomposition(beta, L, mode_range="Z", cfg=None):
    """F1b / b1 rebuilt from standing waves between the plates.

    After resumming the image series into plate modes k_m = m pi / L and
    summing over Matsubara frequencies,

        F1b / b1 = vacuum(L) - thermal(beta, L) + pi^2 L / (45 beta^4),

    with vacuum = pi^2 / (240 L^3) and thermal the Bose-weighted mode sum.
    ``mode_range`` selects m in Z ("Z") or m >= 1 ("N"); only "Z"
    reproduces :func:`f1b`, at every temperature.
    """
    _pos(beta=beta, L=L)
    if mode_range not in ("Z", "N"):
        raise DomainError("mode_range must be 'Z' or 'N'")
    share = 1.0 if mode_range == "Z" else 0.5
    return math.fsum(
        [
            share * plate_vacuum_closed(L),
            -share * plate_thermal_sum(beta, L, cfg),
            math.pi**2 * L / (45.0 * beta**4),
        ]
    )


def two_loop_lowT(L, m, alpha):
    """-pi^2/(720 L^3) [1 - 9 alpha / (32 m L)], independent of temperature."""
    _pos(L=L, m=m)
    return casimir_lowT_free(L) * (1.0 - 9.0 * alpha / (32.0 * m * L))


def two_loop_highT(beta, L, m, alpha):
    """High-temperature two-loop free energy, term by term as published."""
    _pos(beta=beta, L=L, m=m)
    z3 = zeta(3)
    return (
        -math.pi**2 * L / (45.0 * beta**4) * (1.0 - 3.0 * alpha / (32.0 * m * L))
        + z3 / (2.0 * math.pi * beta**3)
        - z3 / (8.0 * math.pi * beta * L**2) * (1.0 - 3.0 * alpha / (16.0 * m * L))
    )


def two_loop_highT_alpha(beta, L, m, alpha):
    """Order-alpha part of :func:`two_loop_highT`, without the cancellation of a difference."""
    _pos(beta=beta, L=L, m=m)
    b1 = 3.0 * alpha / (32.0 * m * L)
    return b1 * math.pi**2 * L / (45.0 * beta**4) + b1 * zeta(3) / (4.0 * math.pi * beta * L**2)


def closed_form_regime(sys, cfg=None, conv=SignConvention.as_printed):
    """Closed-form value appropriate to the regime, or None at crossover.

    Low temperature quotes the temperature-independent two-loop result;
    under ``reconciled`` the flipped F1a no longer cancels the T^4 part of
    F1b and the extra 2 b1 pi^2 L / (45 beta^4) is added.  High
    temperature quotes the published formula, which corresponds to the
    ``reconciled`` sign; under ``as_printed`` the closed high-T value of
    the implemented model is quoted instead.
    """
    conv = SignConvention.parse(conv)
    regime = classify_regime(sys, cfg)
    b1 = b1_coefficient(sys)
    bulk4 = 2.0 * b1 * math.pi**2 * sys.L / (45.0 * sys.beta**4)
    if regime is Regime.LowT:
        value = two_loop_lowT(sys.L, sys.m, sys.alpha)
        return value + bulk4 if conv is SignConvention.reconciled else value
    if regime is Regime.HighT:
        value = two_loop_highT(sys.beta, sys.L, sys.m, sys.alpha)
        return value if conv is SignConvention.reconciled else value - bulk4
    return None


def total_free_energy(sys, cfg=None, conv=SignConvention.as_printed):
    """F0 + F1a + F1b for a validated :class:`PlateSystem`.

    The result always comes from the numeric engines (method ``numeric``);
    the regime closed form, when one applies, is attached under
    ``annotations['closed_form']``.
    """
    cfg = cfg or SumConfig()
    conv = SignConvention.parse(conv)
    validate(sys, emit=False)
    f0 = free_energy_F0(sys.beta, sys.L, cfg)
    b1 = b1_coefficient(sys)
    parts = dict(f0.parts)
    err = f0.error_bound
    if sys.alpha != 0.0:
        parts["order_alpha_a"] = f1a(sys.beta, sys.L, b1, conv)
        val_b, err_b = f1b(sys.beta, sys.L, b1, cfg)
        parts["order_alpha_b"] = val_b
        err += err_b
    regime = classify_regime(sys, cfg)
    notes = {"regime": regime.value, "b1": b1, "convention": conv.value}
    closed = closed_form_regime(sys, cfg, conv)
    if closed is not None:
        notes["closed_form"] = closed
        notes["closed_form_method"] = (
            Method.closed_low.value if regime is Regime.LowT else Method.closed_high.value
        )
    return FreeEnergyResult.from_parts(parts, err, Method.numeric, notes)
