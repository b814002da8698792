"""
Free energy from low to high temperature
=========================================

Sweep beta/L across the crossover and compare the numeric free energy
with the low- and high-temperature closed forms.
"""

import math

import numpy as np

from casimir_eft import PlateSystem, total_free_energy
from casimir_eft.eft import two_loop_highT, two_loop_lowT

L, m, alpha = 1.0, 1000.0, 1 / 137.036

# the numeric engine is valid everywhere; each closed form only in its regime
print(f"{'beta/L':>8} {'F numeric':>16} {'low-T form':>16} {'high-T form':>16} {'regime':>10}")
for ratio in np.geomspace(0.05, 50.0, 13):
    beta = ratio * L
    res = total_free_energy(PlateSystem(L=L, beta=beta, m=m, alpha=alpha))
    low = two_loop_lowT(L, m, alpha)
    high = two_loop_highT(beta, L, m, alpha)
    print(f"{ratio:8.3g} {res.total:16.9g} {low:16.9g} {high:16.9g} {res.annotations['regime']:>10}")

# at low temperature the result approaches -pi^2/720 L^3 with the order-alpha shift
print("\n-pi^2/720 =", -math.pi**2 / 720)
