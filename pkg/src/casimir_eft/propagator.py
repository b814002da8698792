"""Plate propagator kernels in the mixed (k_perp, z) representation.

For a transverse mode with energy gamma the plate-dependent part of the
scalar propagator is built from the image bracket

    B_s(z, z') = e^{gamma L} (e^{-gamma(|z| + |z'|)} + e^{-gamma(|z-L| + |z'-L|)})
                 + s (e^{-gamma(|z| + |z'-L|)} + e^{-gamma(|z-L| + |z'|)}),

and the full kernel is

    D_s(z, z') = [e^{-gamma |z - z'|} + s B_s(z, z') / (2 sinh gamma L)] / (2 gamma).

s = -1 is the bracket as printed for the Euclidean propagator and gives
Dirichlet conditions D(0, z') = D(L, z') = 0; s = +1 gives Neumann
conditions dD/dz = 0 at both plates.  Both choices lead to the same
finite coincident-point integral, Lgamma / (e^{2 gamma L} - 1), because
they differ only in the scale-free constant +-1/2 per mode, which
vanishes in dimensional regularisation.

All exponentials are combined before exponentiation, so nothing of the
form e^{+gamma L} * (small) is ever formed.
"""

import math

import numpy as np
from scipy import integrate

from .errors import DomainError, UnsupportedDimensionError

__all__ = [
    "image_bracket",
    "boundary_kernel",
    "scalar_propagator",
    "integrated_coincident_kernel",
    "coincident_kernel_quad",
    "gauge_kernel_value",
    "neumann_check",
    "neumann_residual",
    "dirichlet_check",
    "neumann_bracket_sign",
]


def _check(gamma, L, z=None, zp=None):
    if not (gamma > 0 and L > 0):
        raise DomainError("gamma and L must be positive")
    for name, v in (("z", z), ("zprime", zp)):
        if v is not None and not np.all((np.asarray(v) >= 0) & (np.asarray(v) <= L)):
            raise DomainError(f"{name} must lie in [0, L]")


def image_bracket(gamma, L, z, zp, sign=-1, scaled=False):
    """B_s(gamma, L, z, z'); with ``scaled`` returns B_s e^{-gamma L}.

    The scaled form stays finite for any gamma L, the raw form overflows
    once gamma L exceeds roughly 700.
    """
    _check(gamma, L, z, zp)
    z = np.asarray(z, dtype=np.float64)
    zp = np.asarray(zp, dtype=np.float64)
    shift = -gamma * L if scaled else 0.0
    a = np.abs(z)
    b = np.abs(zp)
    al = np.abs(z - L)
    bl = np.abs(zp - L)
    direct = np.exp(gamma * (L - a - b) + shift) + np.exp(gamma * (L - al - bl) + shift)
    crossed = np.exp(-gamma * (a + bl) + shift) + np.exp(-gamma * (al + b) + shift)
    out = direct + sign * crossed
    return float(out) if out.ndim == 0 else out


def boundary_kernel(gamma, L, z, zprime):
    """The printed image bracket (relative sign -1)."""
    return image_bracket(gamma, L, z, zprime, sign=-1)


def scalar_propagator(gamma, L, z, zp, sign):
    """D_s(z, z') for one transverse mode, see the module docstring."""
    _check(gamma, L, z, zp)
    z = np.asarray(z, dtype=np.float64)
    # B / (2 sinh gL) = B e^{-gL} / (1 - e^{-2gL})
    plate = image_bracket(gamma, L, z, zp, sign, scaled=True) / -math.expm1(-2.0 * gamma * L)
    out = (np.exp(-gamma * np.abs(z - zp)) + sign * plate) / (2.0 * gamma)
    return float(out) if np.ndim(out) == 0 else out


def integrated_coincident_kernel(gamma, L):
    """Finite part of int_0^L dz <A0 d_z^2 A0> per transverse mode.

    Returns L gamma / (e^{2 gamma L} - 1); underflows cleanly to 0.
    """
    _check(gamma, L)
    x = 2.0 * gamma * L
    return L * gamma * math.exp(-x) / -math.expm1(-x)


def coincident_kernel_quad(gamma, L, sign=-1):
    """z-quadrature route to :func:`integrated_coincident_kernel`.

    Integrates the plate part of d_z^2 D_s at z = z',
    s gamma B_s(z, z) / (4 sinh gamma L), over [0, L] and removes the
    scale-free constant s/2.  Accurate to ~1e-15 absolute.
    """
    _check(gamma, L)
    denom = -math.expm1(-2.0 * gamma * L)

    def f(z):
        return sign * gamma * image_bracket(gamma, L, z, z, sign, scaled=True) / (2.0 * denom)

    val, _ = integrate.quad(f, 0.0, L, epsabs=1e-14, epsrel=1e-13, limit=200)
    return val - sign * 0.5


def gauge_kernel_value(gamma, L, d=2):
    """Gauge-field block: (1 - d) times the scalar block."""
    if d != 2:
        raise UnsupportedDimensionError(f"only d = 2 is implemented, got d = {d!r}")
    return (1 - d) * integrated_coincident_kernel(gamma, L)


def _one_sided_slope(gamma, L, sign, z0, h, zp):
    d0 = scalar_propagator(gamma, L, z0, zp, sign)
    d1 = scalar_propagator(gamma, L, z0 + h, zp, sign)
    return (d1 - d0) / h, d0


def neumann_residual(gamma, L, eps, sign, at="left", zp=None):
    """|dD_s/dz| / |D_s| by a one-sided difference at distance eps from a plate."""
    _check(gamma, L)
    if not 0 < eps < L / 4:
        raise DomainError("eps must satisfy 0 < eps << L")
    zp = L / 3.0 if zp is None else zp
    if at == "left":
        slope, val = _one_sided_slope(gamma, L, sign, eps, eps, zp)
    else:
        slope, val = _one_sided_slope(gamma, L, sign, L - eps, -eps, zp)
    return abs(slope) / abs(val)


def neumann_bracket_sign(gamma=1.0, L=1.0, eps=1e-6):
    """The relative bracket sign (+1 or -1) that satisfies Neumann conditions."""
    res = {s: neumann_residual(gamma, L, eps, s) for s in (+1, -1)}
    return min(res, key=res.get)


def neumann_check(gamma, L, eps, at="left"):
    """Neumann residual of the scalar kernel at z = eps (or L - eps).

    The relative bracket sign is chosen by :func:`neumann_bracket_sign`.
    The residual is O(eps).
    """
    return neumann_residual(gamma, L, eps, neumann_bracket_sign(gamma, L), at=at)


def dirichlet_check(gamma, L, zp=None, sign=-1):
    """|D_s(0, z')| + |D_s(L, z')| normalised by D_s(z', z')."""
    _check(gamma, L)
    zp = L / 3.0 if zp is None else zp
    edge = abs(scalar_propagator(gamma, L, 0.0, zp, sign)) + abs(
        scalar_propagator(gamma, L, L, zp, sign)
    )
    return edge / abs(scalar_propagator(gamma, L, zp, zp, sign))
