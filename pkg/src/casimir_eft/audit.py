"""Executable ledger of the closed-form limits and matching identities.

Each identity is evaluated at every applicable grid point (and, where the
sign of the bulk order-alpha term matters, under both conventions).  The
suite never repairs a failing identity; it reports lhs, rhs and the
normalised residual so the size of any discrepancy is visible.

Identities
----------
I1_resummation        sum_m 1/(g^2 + k_m^2) = (2L/g)[1/2 + 1/(e^{2gL} - 1)]
I2_lowT_order_alpha   F1a + F1b -> b1 pi^2 / (240 L^3)               (beta/L >= 8)
I3_highT_plate_sum    2L S -> zeta(3) / (4 pi beta L^2)              (L/beta >= 8)
I4_highT_order_alpha  F1a + F1b = alpha terms of the high-T formula   (L/beta >= 8)
I5_dimred_match       T (f + F0_3d + F1_3d) = high-T formula
I6_coincident_kernel  (e1 + e2) zeta(3)/(8 pi L^2) = kernel quadrature
I7_free_field_limit   F0 -> -pi^2/(720 L^3) (beta/L >= 8) or the alpha = 0
                      high-T formula (L/beta >= 8)
"""

import json
import math
from dataclasses import dataclass, field
from importlib import resources

from .dimred import f1_3d, f1_3d_kernel, match_highT
from .domain import ALPHA_QED, PlateSystem, b1_coefficient
from .eft import SignConvention, f1a, f1b, plate_decomposition, two_loop_highT, two_loop_highT_alpha
from .errors import CasimirError
from .freefield import casimir_lowT_free, free_energy_F0
from .modesum import SumConfig, inter_sum, resummation_identity
from .propagator import neumann_bracket_sign, neumann_residual
from .specfun import zeta

__all__ = [
    "IDENTITIES",
    "DEFAULT_TOLERANCES",
    "ConsistencyReport",
    "AuditResult",
    "default_grid",
    "zeta_reg_f1a_oracle",
    "run_identity_suite",
    "audit",
    "load_report_schema",
]

SCHEMA_FILE = "schemas/consistency_report.schema.json"

IDENTITIES = (
    "I1_resummation",
    "I2_lowT_order_alpha",
    "I3_highT_plate_sum",
    "I4_highT_order_alpha",
    "I5_dimred_match",
    "I6_coincident_kernel",
    "I7_free_field_limit",
)

DEFAULT_TOLERANCES = {
    "I1_resummation": 1e-8,
    "I2_lowT_order_alpha": 1e-8,  # in units of |b1| / L^3
    "I3_highT_plate_sum": 1e-10,
    "I4_highT_order_alpha": 1e-10,
    "I5_dimred_match": 1e-12,
    "I6_coincident_kernel": 1e-10,
    "I7_free_field_limit": 1e-7,  # low T: units of 1/L^3; high T: relative 1e-10
}
I7_HIGH_T_TOL = 1e-10

# identities whose outcome depends on the sign convention
CONVENTION_DEPENDENT = ("I2_lowT_order_alpha", "I4_highT_order_alpha")
LIMIT_RATIO = 8.0
RESUM_TRUNC = 10**4


@dataclass(frozen=True)
class ConsistencyReport:
    identity_id: str
    grid_point: tuple  # (beta, L, m, alpha)
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    convention: str = None
    passed: bool = False
    error: str = None

    def to_dict(self):
        beta, L, m, alpha = self.grid_point
        return {
            "identity_id": self.identity_id,
            "grid_point": {"beta": beta, "L": L, "m": m, "alpha": alpha},
            "lhs": _json_num(self.lhs),
            "rhs": _json_num(self.rhs),
            "residual": _json_num(self.residual),
            "tolerance": self.tolerance,
            "convention": self.convention,
            "pass": self.passed,
            "error": self.error,
        }


def _json_num(x):
    return x if math.isfinite(x) else None


@dataclass
class AuditResult:
    reports: list
    reconciling_convention: str = None
    conventions_passing: list = field(default_factory=list)
    zeta_oracle: dict = field(default_factory=dict)
    propagator_sign: dict = field(default_factory=dict)
    plate_mode_range: dict = field(default_factory=dict)

    @property
    def all_pass(self):
        """Every convention-independent report and every report of the named convention passes."""
        if self.reconciling_convention is None:
            return False
        return all(
            r.passed
            for r in self.reports
            if r.convention in (None, self.reconciling_convention)
        )

    def summary(self):
        return {
            "reconciling_convention": self.reconciling_convention,
            "conventions_passing": list(self.conventions_passing),
            "all_pass": self.all_pass,
            "zeta_oracle": dict(self.zeta_oracle),
            "propagator_sign": dict(self.propagator_sign),
            "plate_mode_range": dict(self.plate_mode_range),
        }

    def to_dict(self):
        """Document in the layout of ``schemas/consistency_report.schema.json``."""
        return {"summary": self.summary(), "reports": [r.to_dict() for r in self.reports]}


def load_report_schema():
    """The JSON schema that :meth:`AuditResult.to_dict` documents satisfy."""
    text = resources.files(__package__).joinpath(SCHEMA_FILE).read_text(encoding="utf-8")
    return json.loads(text)


def default_grid(m=1000.0, alpha=ALPHA_QED):
    """beta/L in {0.05, 0.1, 1, 10, 20} for L in {0.5, 1, 2}."""
    return [
        (ratio * L, L, m, alpha) for L in (0.5, 1.0, 2.0) for ratio in (0.05, 0.1, 1.0, 10.0, 20.0)
    ]


def zeta_reg_f1a_oracle(beta, L):
    """F1a / b1 recomputed by zeta regularisation of the Matsubara sum.

    The bulk sum-integral is -d L T sum_n int d^3k/(2pi)^3 k_3^2 / (omega_n^2 + k^2).
    With k_3^2 -> k^2 / 3 and the dimensionally regularised
    int d^3k/(2pi)^3 1/(k^2 + w^2) = -|w| / (4 pi) the integral is |w|^3 / (12 pi);
    the frequency sum sum_n |2 pi n T|^3 = 2 (2 pi T)^3 zeta(-3).
    """
    T = 1.0 / beta
    d = 2
    freq_sum = 2.0 * (2.0 * math.pi * T) ** 3 * zeta(-3)
    return -d * L * T * freq_sum / (12.0 * math.pi)


def _residual(lhs, rhs, scale):
    diff = abs(lhs - rhs)
    if diff == 0.0:
        return 0.0
    return diff / scale if scale > 0.0 else math.inf


def _make(identity, point, lhs, rhs, scale, tol, conv=None):
    res = _residual(lhs, rhs, scale)
    return ConsistencyReport(identity, point, lhs, rhs, res, tol, conv, res <= tol)


def _point_reports(point, cfg, tols):
    beta, L, m, alpha = point
    sys = PlateSystem(L=L, beta=beta, m=m, alpha=alpha)
    b1 = b1_coefficient(sys)
    low = beta / L >= LIMIT_RATIO
    high = L / beta >= LIMIT_RATIO
    out = []

    gamma = 1.0 / L
    lhs, rhs, res = resummation_identity(gamma, L, RESUM_TRUNC)
    tol = tols["I1_resummation"]
    out.append(ConsistencyReport("I1_resummation", point, lhs, rhs, res, tol, None, res <= tol))

    if low or high:
        f1b_val, _ = f1b(beta, L, b1, cfg)
    if low:
        rhs = b1 * math.pi**2 / (240.0 * L**3)
        scale = (abs(b1) or 1.0) / L**3
        for conv in SignConvention:
            lhs = f1a(beta, L, b1, conv) + f1b_val
            out.append(_make("I2_lowT_order_alpha", point, lhs, rhs, scale, tols["I2_lowT_order_alpha"], conv.value))
    if high:
        two_ls = 2.0 * L * inter_sum(beta, L, cfg).value
        closed = zeta(3) / (4.0 * math.pi * beta * L**2)
        out.append(_make("I3_highT_plate_sum", point, two_ls, closed, abs(closed), tols["I3_highT_plate_sum"]))
        rhs = two_loop_highT_alpha(beta, L, m, alpha)
        for conv in SignConvention:
            lhs = f1a(beta, L, b1, conv) + f1b_val
            out.append(_make("I4_highT_order_alpha", point, lhs, rhs, abs(rhs), tols["I4_highT_order_alpha"], conv.value))

    rep = match_highT(sys, warn=False)
    out.append(_make("I5_dimred_match", point, rep.lhs, rep.rhs, abs(rep.rhs), tols["I5_dimred_match"]))

    closed = f1_3d(L, 1.0, 1.0)
    kernel = f1_3d_kernel(L, 1.0, 1.0)
    out.append(_make("I6_coincident_kernel", point, kernel, closed, abs(closed), tols["I6_coincident_kernel"]))

    if low or high:
        f0 = free_energy_F0(beta, L, cfg).total
        if low:
            rhs = casimir_lowT_free(L)
            out.append(_make("I7_free_field_limit", point, f0, rhs, 1.0 / L**3, tols["I7_free_field_limit"]))
        else:
            rhs = two_loop_highT(beta, L, m, 0.0)
            tol = min(I7_HIGH_T_TOL, tols["I7_free_field_limit"])
            out.append(_make("I7_free_field_limit", point, f0, rhs, abs(rhs), tol))
    return out


def run_identity_suite(grid, cfg=None, tolerances=None):
    """Evaluate I1-I7 on every grid point; returns a list of reports.

    Engine failures at one point become failing reports carrying the error
    message; they never abort the rest of the suite.  Ordering is grid
    order, then identity order, then convention order.
    """
    if not grid:
        raise ValueError("grid must not be empty")
    cfg = cfg or SumConfig()
    tols = dict(DEFAULT_TOLERANCES)
    tols.update(tolerances or {})
    reports = []
    for point in grid:
        point = tuple(float(v) for v in point)
        try:
            reports.extend(_point_reports(point, cfg, tols))
        except CasimirError as exc:
            nan = math.nan
            reports.append(
                ConsistencyReport("engine_error", point, nan, nan, nan, 0.0, None, False, str(exc))
            )
    return reports


def _conventions_passing(reports):
    passing = []
    for conv in SignConvention:
        relevant = [
            r for r in reports if r.identity_id in CONVENTION_DEPENDENT and r.convention == conv.value
        ]
        if all(r.passed for r in relevant):
            passing.append(conv.value)
    return passing


def audit(grid=None, cfg=None, tolerances=None):
    """Run the identity suite and the side investigations it depends on.

    Besides the reports, the result records

    * which sign convention(s) satisfy I2 and I4 together on the grid;
      ``reconciling_convention`` names it when exactly one does, falls back
      to ``as_printed`` when both do (alpha = 0), and is None otherwise;
    * the sign of the zeta-regularised bulk term against the printed one;
    * which relative sign in the image bracket obeys Neumann conditions;
    * which plate-mode range reproduces the plate sum.

    The last three are probes at beta = L = 1 and ignore ``cfg``.
    """
    grid = grid if grid is not None else default_grid()
    cfg = cfg or SumConfig()
    reports = run_identity_suite(grid, cfg, tolerances)
    passing = _conventions_passing(reports)
    if len(passing) == 1:
        named = passing[0]
    elif len(passing) == 2:
        named = SignConvention.as_printed.value
    else:
        named = None

    oracle = zeta_reg_f1a_oracle(1.0, 1.0)
    printed = f1a(1.0, 1.0, 1.0, SignConvention.as_printed)
    zeta_info = {
        "value_at_beta1_L1": oracle,
        "magnitude": abs(oracle),
        "printed_value": printed,
        "sign_verdict": "as_printed" if math.copysign(1.0, oracle) == math.copysign(1.0, printed) else "reconciled",
    }

    s = neumann_bracket_sign()
    prop_info = {
        "printed_relative_sign": -1,
        "neumann_relative_sign": s,
        "neumann_residual_printed": neumann_residual(1.0, 1.0, 1e-6, -1),
        "neumann_residual_chosen": neumann_residual(1.0, 1.0, 1e-6, s),
    }

    # fixed probe point, always with default engine settings
    probe = SumConfig()
    ref = f1b(1.0, 1.0, 1.0, probe)[0]
    mode_info = {
        "range": None,
        "residual_Z": abs(plate_decomposition(1.0, 1.0, "Z", probe) - ref),
        "residual_N": abs(plate_decomposition(1.0, 1.0, "N", probe) - ref),
    }
    mode_info["range"] = "Z" if mode_info["residual_Z"] < mode_info["residual_N"] else "N"

    return AuditResult(reports, named, passing, zeta_info, prop_info, mode_info)
