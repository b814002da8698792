"""Real-argument special functions: Riemann zeta, Gamma and Li_{-p}.

Zeta and Gamma are evaluated in plain floating point without scipy, so
the closed forms elsewhere in the package carry their own error budget.

* ``zeta`` -- Euler-Maclaurin summation for s >= 0, functional equation
  for s < 0.
* ``gamma_fn`` -- Lanczos approximation (g = 7, 9 terms) with reflection
  below 1/2.
* ``polylog_neg`` -- the rational closed forms of Li_0, Li_{-1}, Li_{-2}.
"""

import math

import numpy as np

from .errors import DomainError, PoleError

__all__ = ["zeta", "gamma_fn", "polylog_neg", "polylog_neg_exp"]

# Bernoulli numbers B_2, B_4, ..., B_24
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
)

# direct terms before the Euler-Maclaurin correction kicks in
_EM_N = 12

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _zeta_euler_maclaurin(s):
    n = _EM_N
    head = math.fsum(k ** -s for k in range(1, n))
    tail = [n ** (1.0 - s) / (s - 1.0), 0.5 * n ** -s]
    # rising factorial s (s+1) ... (s+2k-2) times N^{-s-2k+1} / (2k)!
    rising = s
    power = n ** (-s - 1.0)
    fact = 2.0
    for k, b2k in enumerate(_BERNOULLI_EVEN, start=1):
        term = b2k / fact * rising * power
        tail.append(term)
        if abs(term) < 1e-18 * abs(head):
            break
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= n * n
        fact *= (2 * k + 1) * (2 * k + 2)
    return head + math.fsum(tail)


def zeta(s):
    """Riemann zeta function of a real argument.

    Parameters
    ----------
    s : float
        Any finite real number except 1.

    Returns
    -------
    float
        zeta(s) to about 14 significant digits on the ranges used in
        this package (|s| <= 10).

    Raises
    ------
    PoleError
        At s = 1.
    """
    s = float(s)
    if not math.isfinite(s):
        raise DomainError("zeta argument must be finite")
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if s >= 0.0:
        return _zeta_euler_maclaurin(s)
    if s == math.floor(s) and int(s) % 2 == 0:
        return 0.0  # trivial zeros
    # zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    one_minus = 1.0 - s
    return (
        2.0 ** s
        * math.pi ** (s - 1.0)
        * _sin_pi(0.5 * s)
        * gamma_fn(one_minus)
        * _zeta_euler_maclaurin(one_minus)
    )


def _sin_pi(s):
    # sin(pi s) with the argument reduced first, exact near integers
    n = round(s)
    r = math.sin(math.pi * (s - n))
    return -r if n % 2 else r


def _lanczos(s):
    # valid for s >= 1/2
    s -= 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (s + i)
    t = s + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (s + 0.5) * math.exp(-t) * acc


def gamma_fn(s):
    """Gamma function of a real argument, with reflection for s < 1/2.

    Small positive integers return the exact factorial.
    """
    s = float(s)
    if not math.isfinite(s):
        raise DomainError("gamma argument must be finite")
    if s <= 0.0 and s == math.floor(s):
        raise PoleError(f"gamma has a pole at s = {s:g}")
    if s == math.floor(s) and s <= 171.0:
        return float(math.factorial(int(s) - 1))
    if s < 0.5:
        return math.pi / (_sin_pi(s) * _lanczos(1.0 - s))
    return _lanczos(s)


def _check_order(p):
    if p not in (0, 1, 2):
        raise DomainError(f"polylog order -{p} not supported (p must be 0, 1 or 2)")


def polylog_neg(p, x):
    """Li_{-p}(x) = sum_{n>=1} n**p x**n for p in {0, 1, 2} and 0 <= x < 1."""
    _check_order(p)
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise DomainError(f"polylog_neg requires 0 <= x < 1, got {x!r}")
    return _polylog_rational(p, x, 1.0 - x)


def polylog_neg_exp(p, eps):
    """Li_{-p}(exp(-eps)) for eps > 0, accurate when eps is small.

    ``1 - x`` is formed with ``expm1`` so the pole at x -> 1 does not lose
    digits to cancellation.  Accepts scalars or arrays.
    """
    _check_order(p)
    eps = np.asarray(eps, dtype=np.float64)
    if not np.all(eps > 0.0):
        raise DomainError("polylog_neg_exp requires eps > 0")
    with np.errstate(under="ignore"):
        out = _polylog_rational(p, np.exp(-eps), -np.expm1(-eps))
    return float(out) if out.ndim == 0 else out


def _polylog_rational(p, x, one_minus_x):
    if p == 0:
        return x / one_minus_x
    if p == 1:
        return x / (one_minus_x * one_minus_x)
    return x * (1.0 + x) / (one_minus_x * one_minus_x * one_minus_x)
