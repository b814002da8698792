"""
Auditing the sign of the bulk order-alpha term
===============================================

Run the identity suite under both sign conventions and show why neither
one satisfies the low- and high-temperature identities at once.
"""

import math

from casimir_eft.audit import audit, default_grid
from casimir_eft.domain import ALPHA_QED, PlateSystem, b1_coefficient

result = audit(default_grid())
print(result.summary())

# residuals of the two convention-dependent identities
print(f"\n{'identity':<22} {'convention':<11} {'beta':>6} {'L':>5} {'residual':>10} pass")
for r in result.reports:
    if r.convention is not None:
        beta, L, _, _ = r.grid_point
        print(f"{r.identity_id:<22} {r.convention:<11} {beta:6.3g} {L:5.3g} {r.residual:10.2e} {r.passed}")

# the printed high-T formula differs from the as_printed model by 2 b1 pi^2 L / 45 beta^4
sysm = PlateSystem(L=1.0, beta=0.1, m=1000.0, alpha=ALPHA_QED)
b1 = b1_coefficient(sysm)
print("\n2 b1 pi^2 L / 45 beta^4 at beta=0.1, L=1:", 2 * b1 * math.pi**2 / (45 * 0.1**4))
print("zeta-regularised oracle verdict:", result.zeta_oracle["sign_verdict"])
