"""Physical inputs, matching coefficients and regime classification.

Natural units throughout (hbar = c = k_B = 1): lengths and inverse
temperatures in the same unit, masses in its inverse.  Free energies are
per unit plate area, dimension length^-3.
"""

import enum
import math
import warnings
from dataclasses import dataclass, field, replace

from .errors import DomainError, ValidationError
from .modesum import SumConfig

__all__ = [
    "ALPHA_QED",
    "EFT_MIN_PRODUCT",
    "EftDomainWarning",
    "PlateSystem",
    "EftCoefficients",
    "Regime",
    "b1_coefficient",
    "classify_regime",
    "validate",
]

ALPHA_QED = 1.0 / 137.036
EFT_MIN_PRODUCT = 10.0  # m L and m beta below this: EFT expansion unreliable
D1_SURFACE = -3.0 * ALPHA_QED / 32.0


class EftDomainWarning(UserWarning):
    """Inputs outside m^-1 << beta, L where the effective theory applies."""


@dataclass(frozen=True)
class PlateSystem:
    """Two plates a distance ``L`` apart at inverse temperature ``beta``."""

    L: float
    beta: float
    m: float = 1000.0
    alpha: float = ALPHA_QED

    @property
    def T(self):
        return 1.0 / self.beta

    @classmethod
    def from_temperature(cls, L, T, m=1000.0, alpha=ALPHA_QED):
        if not T > 0:
            raise ValidationError("T", f"must be positive, got {T!r}")
        return cls(L=L, beta=1.0 / T, m=m, alpha=alpha)

    @property
    def eft_valid(self):
        return self.m * self.L >= EFT_MIN_PRODUCT and self.m * self.beta >= EFT_MIN_PRODUCT

    def with_(self, **changes):
        return replace(self, **changes)


def b1_coefficient(sys):
    """Coefficient of the boundary operator, 3 alpha / (32 m L)."""
    if not (sys.m > 0 and sys.L > 0):
        raise DomainError("b1 needs m > 0 and L > 0")
    return 3.0 * sys.alpha / (32.0 * sys.m * sys.L)


@dataclass(frozen=True)
class EftCoefficients:
    """Matching data of the 4d and 3d effective theories.

    At leading order the static-sector couplings equal b1; use
    :meth:`from_system` for that, or build the dataclass directly to
    override them.  ``f_unit`` is filled in on demand by
    :func:`casimir_eft.dimred.unit_operator_f` since it needs beta and L.
    """

    b1: float
    e1: float
    e2: float
    f_unit: float = math.nan
    d1: float = field(default=D1_SURFACE)

    @classmethod
    def from_system(cls, sys):
        b1 = b1_coefficient(sys)
        return cls(b1=b1, e1=b1, e2=b1, d1=-3.0 * sys.alpha / 32.0)


class Regime(enum.Enum):
    LowT = "LowT"
    HighT = "HighT"
    Crossover = "Crossover"


def classify_regime(sys, cfg=None):
    """LowT if beta/L >= r_low, HighT if L/beta >= r_high, else Crossover.

    Only used to decide which closed forms to quote next to the numerics.
    """
    cfg = cfg or SumConfig()
    if sys.beta / sys.L >= cfg.r_low:
        return Regime.LowT
    if sys.L / sys.beta >= cfg.r_high:
        return Regime.HighT
    return Regime.Crossover


def validate(sys, emit=True):
    """Check a :class:`PlateSystem`; return ``(sys, warning_messages)``.

    Non-positive or non-finite L, beta, m and alpha outside [0, 1) raise
    :class:`ValidationError`.  Points outside the EFT domain only produce
    warnings, which are also issued through :mod:`warnings` when ``emit``.
    """
    for name in ("L", "beta", "m"):
        v = getattr(sys, name)
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
            raise ValidationError(name, f"must be positive and finite, got {v!r}")
    if not (math.isfinite(sys.alpha) and 0.0 <= sys.alpha < 1.0):
        raise ValidationError("alpha", f"must lie in [0, 1), got {sys.alpha!r}")

    msgs = []
    if sys.m * sys.L < EFT_MIN_PRODUCT:
        msgs.append(f"m*L = {sys.m * sys.L:g} < {EFT_MIN_PRODUCT:g}: outside EFT domain")
    if sys.m * sys.beta < EFT_MIN_PRODUCT:
        msgs.append(f"m*beta = {sys.m * sys.beta:g} < {EFT_MIN_PRODUCT:g}: outside EFT domain")
    if emit:
        for msg in msgs:
            warnings.warn(msg, EftDomainWarning, stacklevel=2)
    return sys, msgs
