"""Casimir pressure and entropy from the free energy per unit area.

Both are finite differences of :func:`casimir_eft.eft.total_free_energy`.
The free energy is re-evaluated with a tightened series tolerance so the
difference quotient is not dominated by truncation noise; for closed
forms in the low/high temperature regimes an analytic derivative is
available as well.
"""

import enum
import math
from dataclasses import dataclass

from .domain import Regime, classify_regime
from .eft import SignConvention, total_free_energy
from .errors import DomainError
from .modesum import SumConfig
from .specfun import zeta

__all__ = [
    "Scheme",
    "DerivativeConfig",
    "casimir_force",
    "entropy",
    "closed_form_force",
    "closed_form_entropy",
    "central_difference",
]

# tolerance used inside difference quotients
_DIFF_REL_TOL = 1e-15


class Scheme(enum.Enum):
    central_2 = "central_2"
    central_4 = "central_4"


@dataclass(frozen=True)
class DerivativeConfig:
    """Finite-difference settings.

    ``closed_form`` switches to analytic derivatives of the regime closed
    forms when the point is not in the crossover region.
    """

    step_rel: float = 1e-5
    scheme: Scheme = Scheme.central_2
    subtract_bulk: bool = False
    closed_form: bool = False

    def __post_init__(self):
        if not 0.0 < self.step_rel < 1e-2:
            raise DomainError("step_rel must lie in (0, 1e-2)")
        object.__setattr__(self, "scheme", Scheme(self.scheme))


def central_difference(f, x, h, scheme=Scheme.central_2):
    """df/dx by a symmetric 3- or 5-point stencil."""
    if x - 2.0 * h == x or h <= 0.0:
        raise DomainError(f"difference step {h!r} collapses at x = {x!r}")
    if Scheme(scheme) is Scheme.central_2:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h)


def _energy(sys, cfg, conv, subtract_bulk):
    res = total_free_energy(sys, cfg, conv)
    if subtract_bulk:
        return math.fsum(v for k, v in res.parts.items() if k != "blackbody")
    return res.total


def casimir_force(sys, cfg=None, dcfg=None, conv=SignConvention.as_printed):
    """Pressure -dF/dL; units length^-4, negative means attraction.

    b1 depends on L through 1/(m L) and is differentiated along with it.
    """
    cfg = (cfg or SumConfig()).tightened(_DIFF_REL_TOL)
    dcfg = dcfg or DerivativeConfig()
    if dcfg.closed_form and classify_regime(sys, cfg) is not Regime.Crossover:
        return closed_form_force(sys, conv, dcfg.subtract_bulk, cfg)

    def f(L):
        return _energy(sys.with_(L=L), cfg, conv, dcfg.subtract_bulk)

    return -central_difference(f, sys.L, dcfg.step_rel * sys.L, dcfg.scheme)


def entropy(sys, cfg=None, dcfg=None, conv=SignConvention.as_printed):
    """Entropy per unit area S = -dF/dT = beta^2 dF/dbeta; units length^-2."""
    cfg = (cfg or SumConfig()).tightened(_DIFF_REL_TOL)
    dcfg = dcfg or DerivativeConfig()
    if dcfg.closed_form and classify_regime(sys, cfg) is not Regime.Crossover:
        return closed_form_entropy(sys, conv, cfg)

    def f(beta):
        return _energy(sys.with_(beta=beta), cfg, conv, False)

    return sys.beta**2 * central_difference(f, sys.beta, dcfg.step_rel * sys.beta, dcfg.scheme)


def _alpha_sign(conv):
    return -1.0 if SignConvention.parse(conv) is SignConvention.as_printed else 1.0


def closed_form_force(sys, conv=SignConvention.as_printed, subtract_bulk=False, cfg=None):
    """-dF/dL of the regime closed form (b1 L = 3 alpha / 32 m held fixed)."""
    L, beta = sys.L, sys.beta
    k = 3.0 * sys.alpha / (32.0 * sys.m)  # b1 * L
    pi2 = math.pi**2
    regime = classify_regime(sys, cfg)
    if regime is Regime.LowT:
        # F = -pi^2/(720 L^3) + 3 k pi^2/(720 L^4) + [F0 blackbody-like terms cancel];
        # the reconciled extra 2 k pi^2/(45 beta^4) does not depend on L.
        dF = 3.0 * pi2 / (720.0 * L**4) - 12.0 * k * pi2 / (720.0 * L**5)
        if subtract_bulk:
            dF += pi2 / (45.0 * beta**4)
        return -dF
    if regime is Regime.HighT:
        z3 = zeta(3)
        # F = -pi^2 L/(45 b^4) + s k pi^2/(45 b^4) + z3/(2 pi b^3)
        #     - z3/(8 pi b) (L^-2 - 2 k L^-3)
        dF = z3 / (8.0 * math.pi * beta) * (2.0 / L**3 - 6.0 * k / L**4)
        if not subtract_bulk:
            dF -= pi2 / (45.0 * beta**4)
        return -dF
    raise DomainError("no closed form in the crossover regime")


def closed_form_entropy(sys, conv=SignConvention.as_printed, cfg=None):
    """beta^2 dF/dbeta of the regime closed form."""
    L, beta = sys.L, sys.beta
    k = 3.0 * sys.alpha / (32.0 * sys.m)
    pi2 = math.pi**2
    s = _alpha_sign(conv)
    regime = classify_regime(sys, cfg)
    if regime is Regime.LowT:
        # only the reconciled leftover 2 k pi^2 / (45 beta^4) depends on T
        return 0.0 if s < 0 else beta**2 * (-8.0 * k * pi2 / (45.0 * beta**5))
    if regime is Regime.HighT:
        z3 = zeta(3)
        # F = (-pi^2 L + s k pi^2) / (45 b^4) + z3/(2 pi b^3) - z3 (1 - 2k/L) / (8 pi b L^2)
        dF = (
            -4.0 * (-pi2 * L + s * k * pi2) / (45.0 * beta**5)
            - 3.0 * z3 / (2.0 * math.pi * beta**4)
            + z3 * (1.0 - 2.0 * k / L) / (8.0 * math.pi * beta**2 * L**2)
        )
        return beta**2 * dF
    raise DomainError("no closed form in the crossover regime")
