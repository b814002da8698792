"""
Engine versus brute-force oracles
==================================

Compare the polylog image engine for S(beta, L) with a direct double sum,
and show the rigorous error bound the engine reports.
"""

import time

import numpy as np

from casimir_eft.modesum import inter_sum
from casimir_eft.oracles import inter_sum_bruteforce

print(f"{'beta':>7} {'L':>5} {'engine':>22} {'bound':>9} {'rel gap':>9} {'t_eng':>8} {'t_bf':>8}")
for beta in np.geomspace(0.1, 10.0, 5):
    for L in (0.5, 2.0):
        t0 = time.perf_counter()
        eng = inter_sum(beta, L)
        t1 = time.perf_counter()
        ref = inter_sum_bruteforce(beta, L)
        t2 = time.perf_counter()
        gap = abs(eng.value - ref.value) / abs(ref.value)
        print(f"{beta:7.3g} {L:5.2g} {eng.value:22.16g} {eng.error_bound:9.1e} {gap:9.1e} "
              f"{t1 - t0:8.1e} {t2 - t1:8.1e}")
