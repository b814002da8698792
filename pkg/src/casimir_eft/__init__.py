"""Casimir free energy between parallel plates at finite temperature.

Free-field mode sums, the order-alpha boundary correction of the
low-energy effective theory, its high-temperature dimensional reduction,
and an audit that checks the closed-form limits against the numerics.
"""

from .audit import ConsistencyReport, audit, run_identity_suite, zeta_reg_f1a_oracle
from .dimred import MatchReport, match_highT
from .domain import ALPHA_QED, EftCoefficients, PlateSystem, Regime, b1_coefficient, classify_regime, validate
from .eft import SignConvention, f1a, f1b, total_free_energy, two_loop_highT, two_loop_lowT
from .errors import CasimirError, ConvergenceError, DomainError, PoleError, ValidationError
from .freefield import FreeEnergyResult, free_energy_F0
from .modesum import SumConfig, SumValue, inter_sum
from .specfun import gamma_fn, polylog_neg, zeta
from .thermo import DerivativeConfig, casimir_force, entropy

__version__ = "0.1.0"

__all__ = [
    "ALPHA_QED",
    "CasimirError",
    "ConsistencyReport",
    "ConvergenceError",
    "DerivativeConfig",
    "DomainError",
    "EftCoefficients",
    "FreeEnergyResult",
    "MatchReport",
    "PlateSystem",
    "PoleError",
    "Regime",
    "SignConvention",
    "SumConfig",
    "SumValue",
    "ValidationError",
    "audit",
    "b1_coefficient",
    "casimir_force",
    "classify_regime",
    "entropy",
    "f1a",
    "f1b",
    "free_energy_F0",
    "gamma_fn",
    "inter_sum",
    "match_highT",
    "polylog_neg",
    "run_identity_suite",
    "total_free_energy",
    "two_loop_highT",
    "two_loop_lowT",
    "validate",
    "zeta",
    "zeta_reg_f1a_oracle",
]
