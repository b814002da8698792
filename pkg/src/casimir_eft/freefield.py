"""One-loop (alpha-independent) free energy per unit plate area.

The Euclidean one-loop free energy is split as

    F0 = -pi^2 L / (45 beta^4) + zeta(3) / (2 pi beta^3) + G(beta, L),

a blackbody term extensive in L, an L-independent constant, and the
boundary sum

    G(beta, L) = T sum_n int d^2k/(2pi)^2 log(1 - exp(-2 gamma L)),

both polarisations included.  G is evaluated with the same image/polylog
engine as :func:`casimir_eft.modesum.inter_sum`:
log(1 - y) = -sum_j y^j / j and each image integrates to
int_a^inf g e^{-c g} dg = e^{-a c} (a/c + 1/c^2).
"""

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError
from .modesum import SumConfig, SumValue, image_series
from .specfun import polylog_neg_exp, zeta

__all__ = [
    "Method",
    "FreeEnergyResult",
    "PART_NAMES",
    "boundary_log_sum",
    "blackbody",
    "plate_constant",
    "free_energy_F0",
    "casimir_lowT_free",
]

PART_NAMES = ("blackbody", "plate_constant", "boundary_sum", "order_alpha_a", "order_alpha_b")


class Method(enum.Enum):
    closed_low = "closed_low"
    closed_high = "closed_high"
    numeric = "numeric"


@dataclass
class FreeEnergyResult:
    """Free energy per unit area with its per-term breakdown.

    ``parts`` only holds the terms that were computed; ``total`` is their
    compensated sum.  ``annotations`` carries closed-form regime values
    quoted next to the numerics.
    """

    total: float
    parts: dict
    method: Method = Method.numeric
    error_bound: float = 0.0
    annotations: dict = field(default_factory=dict)

    @classmethod
    def from_parts(cls, parts, error_bound, method=Method.numeric, annotations=None):
        unknown = set(parts) - set(PART_NAMES)
        if unknown:
            raise DomainError(f"unknown free-energy parts {sorted(unknown)}")
        ordered = {k: parts[k] for k in PART_NAMES if k in parts}
        return cls(
            total=math.fsum(ordered.values()),
            parts=ordered,
            method=method,
            error_bound=error_bound,
            annotations=dict(annotations or {}),
        )

    def to_dict(self):
        return {
            "total": self.total,
            "parts": dict(self.parts),
            "method": self.method.value,
            "error_bound": self.error_bound,
            "annotations": dict(self.annotations),
        }


def boundary_log_sum(beta, L, cfg=None):
    """G(beta, L); negative, units length^-3."""
    cfg = cfg or SumConfig()
    if not (beta > 0 and L > 0):
        raise DomainError("beta and L must be positive")
    T = 1.0 / beta
    w = 2.0 * math.pi * T
    eps1 = 4.0 * math.pi * L * T
    q = math.exp(-eps1)

    # n = 0: sum_j (1/j) / (2 j L)^2
    static = zeta(3) / (4.0 * L * L)

    def nonstatic(js):
        c = 2.0 * L * js
        eps = eps1 * js
        li0 = polylog_neg_exp(0, eps)
        li1 = polylog_neg_exp(1, eps)
        return (w * 2.0 * li1 / c + 2.0 * li0 / (c * c)) / js

    rest, tail, used = image_series(nonstatic, q, static, cfg, "boundary_log_sum")
    pref = -T / (2.0 * math.pi)
    return SumValue(pref * (static + rest), -pref * tail, used)


def blackbody(beta, L):
    """Photon-gas term -pi^2 L / (45 beta^4)."""
    return -math.pi**2 * L / (45.0 * beta**4)


def plate_constant(beta):
    """L-independent term zeta(3) / (2 pi beta^3)."""
    return zeta(3) / (2.0 * math.pi * beta**3)


def free_energy_F0(beta, L, cfg=None):
    """One-loop free energy F0 at any temperature.

    Returns
    -------
    FreeEnergyResult
        Parts ``blackbody``, ``plate_constant`` and ``boundary_sum``.
    """
    g = boundary_log_sum(beta, L, cfg)
    parts = {
        "blackbody": blackbody(beta, L),
        "plate_constant": plate_constant(beta),
        "boundary_sum": g.value,
    }
    return FreeEnergyResult.from_parts(parts, g.error_bound)


def casimir_lowT_free(L):
    """Zero-temperature Casimir energy -pi^2 / (720 L^3)."""
    if not L > 0:
        raise DomainError("L must be positive")
    return -math.pi**2 / (720.0 * L**3)
