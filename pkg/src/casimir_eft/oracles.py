"""Independent evaluation paths used to cross-check the engines.

Nothing here uses polylogarithms or the closed forms being tested.  The
double sums run directly over the Matsubara index n and the image index
j; their only refinement is an Euler-Maclaurin tail for the n = 0 row,
whose terms fall off as a power of j rather than exponentially.
"""

import math

import numpy as np
from scipy import integrate

from .modesum import SumConfig, SumValue

__all__ = [
    "inter_sum_bruteforce",
    "boundary_log_sum_bruteforce",
    "static_mode_integral_quad",
    "plate_thermal_sum_quad",
    "power_tail",
]


def power_tail(p, J):
    """sum_{j > J} j^{-p} by Euler-Maclaurin, with a bound on the remainder."""
    J = float(J)
    rising = [1.0]
    for k in range(7):
        rising.append(rising[-1] * (p + k))
    val = (
        J ** (1 - p) / (p - 1)
        - 0.5 * J**-p
        + rising[1] / 12.0 * J ** (-p - 1)
        - rising[3] / 720.0 * J ** (-p - 3)
        + rising[5] / 30240.0 * J ** (-p - 5)
    )
    bound = rising[7] / 1209600.0 * J ** (-p - 7)
    return val, bound


def _grid(beta, L, cfg):
    n_max, j_max = (cfg or SumConfig()).oracle_terms
    T = 1.0 / beta
    n = np.arange(0, n_max + 1, dtype=np.float64)
    j = np.arange(1, j_max + 1, dtype=np.float64)
    a = 2.0 * math.pi * T * n[:, None]  # |omega_n|
    c = 2.0 * L * j[None, :]
    mult = np.where(n == 0, 1.0, 2.0)[:, None]  # +-n
    return T, a, c, mult, n_max, j_max


def inter_sum_bruteforce(beta, L, cfg=None):
    """S(beta, L) as a truncated double sum of e^{-ac}(a^2/c + 2a/c^2 + 2/c^3).

    ``error_bound`` is an estimate from the first omitted row and column
    plus the Euler-Maclaurin remainder of the n = 0 tail.
    """
    T, a, c, mult, n_max, j_max = _grid(beta, L, cfg)
    with np.errstate(under="ignore"):
        terms = mult * np.exp(-a * c) * (a * a / c + 2.0 * a / c**2 + 2.0 / c**3)
    body = math.fsum(terms.ravel())
    # the n = 0 row is 2/(2jL)^3 = j^-3 / (4 L^3)
    tail, tail_err = power_tail(3, j_max)
    total = body + tail / (4.0 * L**3)
    # neglected rows and columns, estimated by the first omitted ones
    a_next = 2.0 * math.pi * T * (n_max + 1)
    c_row = c[0]
    with np.errstate(under="ignore"):
        next_row = 2.0 * np.exp(-a_next * c_row) * (a_next**2 / c_row + 2.0 * a_next / c_row**2 + 2.0 / c_row**3)
    row_est = float(np.sum(next_row)) * 2.0
    col_est = float(np.sum(terms[1:, -1])) * 2.0
    err = T / (2.0 * math.pi) * (tail_err / (4.0 * L**3) + row_est + col_est)
    return SumValue(T / (2.0 * math.pi) * total, err, (n_max + 1) * j_max)


def boundary_log_sum_bruteforce(beta, L, cfg=None):
    """G(beta, L) as a truncated double sum of -(1/j) e^{-ac}(a/c + 1/c^2)."""
    T, a, c, mult, n_max, j_max = _grid(beta, L, cfg)
    j = c / (2.0 * L)
    with np.errstate(under="ignore"):
        terms = mult * np.exp(-a * c) * (a / c + 1.0 / c**2) / j
    body = math.fsum(terms.ravel())
    tail, tail_err = power_tail(3, j_max)
    total = body + tail / (4.0 * L**2)
    col_bound = float(np.sum(terms[1:, -1])) * 2.0
    err = T / (2.0 * math.pi) * (tail_err / (4.0 * L**2) + col_bound)
    return SumValue(-T / (2.0 * math.pi) * total, err, (n_max + 1) * j_max)


def _bose_quad(f, lo=0.0):
    val, _ = integrate.quad(f, lo, np.inf, epsabs=0.0, epsrel=1e-13, limit=400)
    return val


def static_mode_integral_quad(L):
    """(1/2pi) int_0^inf g^2 / (e^{2gL} - 1) dg by adaptive quadrature."""

    def f(g):
        if g <= 0.0:
            return 0.0
        x = 2.0 * g * L
        return g * g * math.exp(-x) / -math.expm1(-x)

    return _bose_quad(f) / (2.0 * math.pi)


def plate_thermal_sum_quad(beta, L, m_max=None):
    """sum_{m in Z} int d^2k/(2pi)^2 (k_m^2/omega) n_B(beta omega) by k-quadrature per mode."""
    if m_max is None:
        m_max = int(40.0 * L / (math.pi * beta)) + 8
    total = []
    for m in range(1, m_max + 1):
        km = m * math.pi / L

        def f(k, km=km):
            w = math.hypot(k, km)
            x = beta * w
            return k * km * km / w * math.exp(-x) / -math.expm1(-x)

        total.append(2.0 * _bose_quad(f) / (2.0 * math.pi))
    return math.fsum(total)
