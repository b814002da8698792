"""Matsubara sums over plate modes.

The central object is

    S(beta, L) = T sum_n int d^2k/(2pi)^2  gamma / (exp(2 gamma L) - 1),

with gamma = sqrt(omega_n^2 + k^2) and omega_n = 2 pi n T.  After the
radial substitution k dk = gamma dgamma the transverse integral becomes
(1/2pi) int_{|omega_n|}^inf gamma^2 dgamma / (exp(2 gamma L) - 1).  The Bose
factor is expanded in images, sum_{j>=1} exp(-2 j gamma L); every image
term integrates to an elementary exponential moment, and the Matsubara
sum of those moments is a finite combination of Li_0, Li_{-1}, Li_{-2}
evaluated at x_j = exp(-4 pi j L T).  What remains is a single sum over
the image index j whose n = 0 part is a zeta value and whose n != 0
part decays geometrically with ratio at most exp(-4 pi L T).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .specfun import polylog_neg_exp, zeta

__all__ = [
    "SumConfig",
    "SumValue",
    "image_series",
    "inter_sum",
    "static_mode_integral",
    "resummation_identity",
    "plate_thermal_sum",
    "plate_vacuum_closed",
]

_CHUNK = 256


@dataclass(frozen=True)
class SumConfig:
    """Tolerances and caps shared by the series and quadrature engines.

    ``oracle_terms`` is the (n_max, j_max) truncation of the brute-force
    double sums in :mod:`casimir_eft.oracles`.  ``r_low`` and ``r_high``
    are the beta/L and L/beta ratios above which a point counts as low-
    or high-temperature.
    """

    rel_tol: float = 1e-11
    abs_tol: float = 1e-300
    max_image: int = 10**6
    max_matsubara: int = 10**6
    oracle_terms: tuple = (2000, 2000)
    r_low: float = 5.0
    r_high: float = 5.0

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive")
        if self.max_image < 1 or self.max_matsubara < 1:
            raise DomainError("term caps must be >= 1")
        n_max, j_max = self.oracle_terms
        if n_max < 1 or j_max < 1:
            raise DomainError("oracle_terms must be >= 1")
        if not (self.r_low > 0 and self.r_high > 0):
            raise DomainError("regime thresholds must be positive")

    def tightened(self, rel_tol):
        """Copy with ``rel_tol`` lowered to at most the given value."""
        fields = dict(self.__dict__)
        fields["rel_tol"] = min(self.rel_tol, rel_tol)
        return SumConfig(**fields)


@dataclass(frozen=True)
class SumValue:
    """A series value with a rigorous truncation bound."""

    value: float
    error_bound: float
    terms_used: int


def _check_positive(**kw):
    for name, v in kw.items():
        if not (v > 0 and math.isfinite(v)):
            raise DomainError(f"{name} must be positive and finite, got {v!r}")


def image_series(term_fn, q, static, cfg, what):
    """Sum ``term_fn(j)`` over j >= 1 where successive terms shrink by <= q.

    ``term_fn`` takes an integer array of image indices and returns the
    non-negative n != 0 contributions.  ``static`` is the already-summed
    n = 0 part, used only for the relative stopping test.  The tail after
    the last computed term t_J is bounded by t_J q / (1 - q).
    """
    one_minus_q = -math.expm1(math.log(q)) if q > 0.0 else 1.0
    chunks = []
    j0 = 1
    while True:
        j_hi = min(j0 + _CHUNK, cfg.max_image + 1)
        js = np.arange(j0, j_hi, dtype=np.float64)
        terms = term_fn(js)
        chunks.append(terms)
        last = float(terms[-1])
        tail = last * q / one_minus_q if q > 0.0 else 0.0
        partial = math.fsum(np.concatenate(chunks)) + abs(static)
        if tail <= max(cfg.rel_tol * partial, cfg.abs_tol) or last == 0.0:
            used = j_hi - 1
            return math.fsum(np.concatenate(chunks)), tail, used
        if j_hi > cfg.max_image:
            raise ConvergenceError(
                f"{what}: tail bound {tail:.3e} above tolerance after "
                f"{cfg.max_image} image terms"
            )
        j0 = j_hi


def inter_sum(beta, L, cfg=None):
    """S(beta, L) by the image/polylog engine; units length^-3.

    The order-alpha plate correction is b1 * 2L * S.

    Parameters
    ----------
    beta, L : float
        Inverse temperature and plate gap.
    cfg : SumConfig, optional

    Returns
    -------
    SumValue
        ``error_bound`` bounds the neglected image tail; the Matsubara sum
        is done exactly.
    """
    cfg = cfg or SumConfig()
    _check_positive(beta=beta, L=L)
    T = 1.0 / beta
    w = 2.0 * math.pi * T
    eps1 = 4.0 * math.pi * L * T
    q = math.exp(-eps1)

    # n = 0, all images: sum_j 2 / (2 j L)^3
    static = zeta(3) / (4.0 * L**3)

    def nonstatic(js):
        c = 2.0 * L * js
        eps = eps1 * js
        li0 = polylog_neg_exp(0, eps)
        li1 = polylog_neg_exp(1, eps)
        li2 = polylog_neg_exp(2, eps)
        return w * w * 2.0 * li2 / c + w * 4.0 * li1 / c**2 + 4.0 * li0 / c**3

    rest, tail, used = image_series(nonstatic, q, static, cfg, "inter_sum")
    pref = T / (2.0 * math.pi)
    return SumValue(pref * (static + rest), pref * tail, used)


def static_mode_integral(L):
    """(1/2pi) int_0^inf g^2 dg / (exp(2 g L) - 1) = zeta(3) / (8 pi L^3)."""
    _check_positive(L=L)
    return zeta(3) / (8.0 * math.pi * L**3)


def resummation_identity(gamma, L, trunc):
    """Check sum_m 1/(gamma^2 + k_m^2) = (2L/gamma)[1/2 + 1/(e^{2 gamma L} - 1)].

    The left side runs over m in Z with |m| <= trunc, k_m = m pi / L, and
    adds the integral estimate of the two tails, (2L/pi) * (pi/2 -
    arctan(k_{trunc+1/2} / gamma)) / gamma.

    Returns
    -------
    (lhs, rhs, residual) with residual = |lhs - rhs| / |rhs|.
    """
    _check_positive(gamma=gamma, L=L)
    if trunc < 1:
        raise DomainError("trunc must be >= 1")
    m = np.arange(1, int(trunc) + 1, dtype=np.float64)
    km = m * math.pi / L
    body = 1.0 / gamma**2 + 2.0 * math.fsum(1.0 / (gamma**2 + km * km))
    # midpoint-rule tail: 2 * (L/pi) * int_{k_{N+1/2}}^inf dk / (gamma^2 + k^2)
    k_edge = (trunc + 0.5) * math.pi / L
    tail = 2.0 * (L / math.pi) * math.atan2(gamma, k_edge) / gamma
    lhs = body + tail
    rhs = (2.0 * L / gamma) * (0.5 + 1.0 / math.expm1(2.0 * gamma * L))
    return lhs, rhs, abs(lhs - rhs) / abs(rhs)


def plate_thermal_sum(beta, L, cfg=None):
    """Thermal part of the standing-wave representation; units length^-3.

    sum_{m in Z} int d^2k/(2pi)^2 (k_m^2/omega) n_B(beta omega), which after
    the k integral is (T/2pi) sum_{m in Z} k_m^2 [-log(1 - exp(-beta k_m))].
    The m = 0 mode carries zero weight; m and -m contribute equally.
    """
    cfg = cfg or SumConfig()
    _check_positive(beta=beta, L=L)
    T = 1.0 / beta
    a = beta * math.pi / L
    q = math.exp(-a)

    def terms(ms):
        km = ms * math.pi / L
        with np.errstate(under="ignore"):
            return 2.0 * km * km * -np.log1p(-np.exp(-a * ms))

    # successive ratios ((m+1)/m)^2 e^{-a}... are bounded by 4 e^{-a} only,
    # so sum until the terms themselves drop below the tolerance floor.
    chunks = []
    m0 = 1
    while True:
        m_hi = min(m0 + _CHUNK, cfg.max_image + 1)
        ms = np.arange(m0, m_hi, dtype=np.float64)
        t = terms(ms)
        chunks.append(t)
        total = math.fsum(np.concatenate(chunks))
        last_m = m_hi - 1
        # for m >= M the ratio t_{m+1}/t_m <= ((M+1)/M)^2 e^{-a} =: r
        r = ((last_m + 1.0) / last_m) ** 2 * q
        tail = float(t[-1]) * r / (1.0 - r) if r < 1.0 else math.inf
        if tail <= max(cfg.rel_tol * total, cfg.abs_tol) or t[-1] == 0.0:
            break
        if m_hi > cfg.max_image:
            raise ConvergenceError("plate_thermal_sum: mode cap reached")
        m0 = m_hi
    return T / (2.0 * math.pi) * total


def plate_vacuum_closed(L):
    """Zeta-regularised vacuum piece -(1/2) sum_{m in Z} int k_m^2/omega.

    In dimensional regularisation int d^2k/(2pi)^2 1/omega = -|k_m| / 2pi,
    so the piece is (1/4pi) sum_m |k_m|^3 = (pi^2 / 2 L^3) zeta(-3) =
    pi^2 / (240 L^3).
    """
    _check_positive(L=L)
    return (math.pi**3 / L**3) * 2.0 * zeta(-3) / (4.0 * math.pi)
