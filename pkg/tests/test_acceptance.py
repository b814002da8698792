"""Acceptance criteria A1-A12 at their stated tolerances.

Each criterion is a function returning ``(passed, detail)``.  Under pytest
every criterion is one test and a PASS/FAIL line per criterion is printed
in the terminal summary; ``python tests/test_acceptance.py`` prints the
same lines without pytest.
"""

import math
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

from casimir_eft import cli
from casimir_eft.audit import audit, default_grid
from casimir_eft.dimred import f1_3d, f1_3d_kernel, match_highT
from casimir_eft.domain import ALPHA_QED, PlateSystem, b1_coefficient
from casimir_eft.eft import two_loop_highT
from casimir_eft.freefield import free_energy_F0
from casimir_eft.modesum import inter_sum, resummation_identity
from casimir_eft.oracles import inter_sum_bruteforce
from casimir_eft.propagator import coincident_kernel_quad, integrated_coincident_kernel
from casimir_eft.specfun import gamma_fn, zeta
from casimir_eft.thermo import DerivativeConfig, Scheme, casimir_force, closed_form_force, entropy

ZETA3_REF = 1.2020569031595942854  # mpmath, 30 digits
F0_HIGHT_REF = -2002.4104076937557071  # mpmath, alpha=0 high-T form at beta=0.1, L=1

RESULTS = {}


def _worst(pairs):
    return max(pairs, key=lambda p: p[0])


def check_A1():
    worst_res, worst_coth = 0.0, 0.0
    for gamma in (0.5, 1.0, 5.0):
        for L in (0.5, 1.0, 2.0):
            _, rhs, res = resummation_identity(gamma, L, 10**4)
            coth = (L / gamma) / math.tanh(gamma * L)
            worst_res = max(worst_res, res)
            worst_coth = max(worst_coth, abs(rhs - coth) / coth)
    ok = worst_res < 1e-8 and worst_coth < 1e-12
    return ok, f"max residual {worst_res:.2e} (< 1e-8), max |rhs - (L/g)coth| {worst_coth:.2e} (< 1e-12)"


def check_A2():
    rels = []
    for ratio in np.geomspace(0.1, 10.0, 5):
        for L in (0.5, 0.75, 1.0, 1.5, 2.0):
            beta = ratio * L
            eng = inter_sum(beta, L).value
            ref = inter_sum_bruteforce(beta, L).value
            rels.append((abs(eng - ref) / abs(ref), beta, L))
    rel, beta, L = _worst(rels)
    return rel < 1e-10, f"25 points, max relative gap {rel:.2e} at beta={beta:.3g}, L={L:.3g} (< 1e-10)"


def check_A3():
    L = 1.0
    out = {}
    for ratio in (20.0, 50.0):
        beta = ratio * L
        closed = math.pi**2 / (240 * L**3) + math.pi**2 * L / (45 * beta**4)
        out[ratio] = abs(2 * L * inter_sum(beta, L).value - closed) / closed
    ok = out[20.0] < 1e-6 and out[50.0] < 1e-9
    return ok, f"beta/L=20: {out[20.0]:.2e} (< 1e-6); beta/L=50: {out[50.0]:.2e} (< 1e-9)"


def check_A4():
    L = 1.0
    beta = L / 10.0
    closed = zeta(3) / (4 * math.pi * beta * L**2)
    rel = abs(2 * L * inter_sum(beta, L).value - closed) / closed
    return rel < 1e-12, f"L/beta=10: relative gap {rel:.2e} (< 1e-12)"


def check_A5():
    worst = []
    for L in (0.5, 1.0, 2.0):
        for ratio in (8.0, 12.0, 20.0):
            gap = abs(free_energy_F0(ratio * L, L).total + math.pi**2 / (720 * L**3)) * L**3
            worst.append((gap, ratio, L))
    gap, ratio, L = _worst(worst)
    return gap < 1e-7, f"max |F0 + pi^2/720L^3| L^3 = {gap:.2e} at beta/L={ratio:g}, L={L:g} (< 1e-7)"


def check_A6():
    rels = []
    for L in (0.5, 1.0, 2.0):
        beta = L / 10.0
        printed = two_loop_highT(beta, L, 1000.0, 0.0)
        rels.append((abs(free_energy_F0(beta, L).total - printed) / abs(printed), L))
    rel, _ = _worst(rels)
    value = free_energy_F0(0.1, 1.0).total
    ref_rel = abs(value - F0_HIGHT_REF) / abs(F0_HIGHT_REF)
    ok = rel < 1e-10 and ref_rel < 1e-10
    return ok, (
        f"max relative gap {rel:.2e} (< 1e-10); F0(0.1, 1) = {value:.6f}, "
        f"vs 30-digit evaluation {ref_rel:.1e} (quoted -2002.409 carries a 1.2e-3 slip)"
    )


def check_A7():
    result = audit(default_grid())
    i2 = [r for r in result.reports if r.identity_id == "I2_lowT_order_alpha" and r.convention == "as_printed"]
    i4 = [r for r in result.reports if r.identity_id == "I4_highT_order_alpha" and r.convention == "as_printed"]
    i2_ok = bool(i2) and all(r.passed for r in i2)
    i4_fails = bool(i4) and not any(r.passed for r in i4)
    gaps = []
    for r in i4:
        beta, L, m, alpha = r.grid_point
        b1 = b1_coefficient(PlateSystem(L=L, beta=beta, m=m, alpha=alpha))
        expected = 2 * b1 * math.pi**2 * L / (45 * beta**4)
        gaps.append(abs((r.rhs - r.lhs) - expected) / expected)
    residual_ok = bool(gaps) and max(gaps) < 1e-10
    verdict = result.zeta_oracle.get("sign_verdict")
    one = len(result.conventions_passing) == 1 and result.reconciling_convention is not None
    ok = i2_ok and i4_fails and residual_ok and verdict is not None and one
    detail = (
        f"I2 as_printed pass={i2_ok}; I4 as_printed fails={i4_fails} with residual = 2b1 pi^2 L/45beta^4 "
        f"to {max(gaps) if gaps else math.nan:.1e}; zeta verdict={verdict}; "
        f"conventions reconciling I2 and I4: {result.conventions_passing or 'none'} (need exactly one)"
    )
    return ok, detail


def check_A8():
    worst = []
    for L in (0.5, 1.0, 2.0):
        for ratio in (8.0, 10.0, 20.0):
            rep = match_highT(PlateSystem(L=L, beta=L / ratio, m=1000.0, alpha=ALPHA_QED))
            worst.append((rep.residual, ratio, L))
    res, _, _ = _worst(worst)
    return res < 1e-12, f"3x3 high-T grid, max residual {res:.2e} (< 1e-12)"


def check_A9():
    L = 1.0
    kern = []
    for gl in np.geomspace(0.1, 20.0, 12):
        gamma = gl / L
        kern.append(abs(coincident_kernel_quad(gamma, L) - integrated_coincident_kernel(gamma, L)))
    kmax = max(kern)
    eff = max(
        abs(f1_3d_kernel(Lx, 1.0, 1.0) - f1_3d(Lx, 1.0, 1.0)) / f1_3d(Lx, 1.0, 1.0) for Lx in (0.5, 1.0, 2.0)
    )
    ok = kmax < 1e-10 and eff < 1e-10
    return ok, f"kernel vs z-quadrature max gap {kmax:.2e}; (e1+e2) zeta(3)/8piL^2 vs kernel path {eff:.2e} (< 1e-10)"


def _zeta3_series():
    n = np.arange(1, 200001, dtype=float)
    N = 200000.0
    return math.fsum(n**-3) + 1 / (2 * N**2) - 1 / (2 * N**3) + 1 / (4 * N**4)


def check_A10():
    # independent oracles: direct series, functional equation with zeta(4) = pi^4/90, reflection
    z3_oracle = _zeta3_series()
    zm3_oracle = 2.0**-3 * math.pi**-4 * math.sin(-3 * math.pi / 2) * math.gamma(4) * math.pi**4 / 90
    g_oracle = math.pi / (math.sin(-1.5 * math.pi) * math.gamma(2.5))
    errs = {
        "zeta(3)": abs(zeta(3) - z3_oracle) / z3_oracle,
        "zeta(3) ref": abs(zeta(3) - ZETA3_REF) / ZETA3_REF,
        "zeta(-3)": abs(zeta(-3) - zm3_oracle) / zm3_oracle,
        "gamma(-3/2)": abs(gamma_fn(-1.5) - g_oracle) / g_oracle,
    }
    ok = all(e < 1e-12 for e in errs.values())
    return ok, ", ".join(f"{k} {v:.1e}" for k, v in errs.items()) + " (< 1e-12)"


def check_A11():
    s_low = entropy(PlateSystem(L=1.0, beta=50.0, m=1000.0, alpha=ALPHA_QED))
    f_low = casimir_force(PlateSystem(L=1.0, beta=50.0, m=1000.0, alpha=0.0))
    f_rel = abs(f_low + math.pi**2 / 240) / (math.pi**2 / 240)
    sysh = PlateSystem(L=1.0, beta=0.1, m=1000.0, alpha=0.0)
    exact = closed_form_force(sysh)
    e2 = [abs(casimir_force(sysh, dcfg=DerivativeConfig(step_rel=h)) - exact) for h in (1e-3, 1e-4)]
    e4 = abs(casimir_force(sysh, dcfg=DerivativeConfig(step_rel=1e-4, scheme=Scheme.central_4)) - exact)
    order2 = math.log10(e2[0] / e2[1])
    ok = abs(s_low) < 1e-7 and f_rel < 1e-6 and 1.8 < order2 < 2.2 and e4 * 10 <= e2[1]
    return ok, (
        f"|S_lowT| {abs(s_low):.1e} (< 1e-7); force vs -pi^2/240 {f_rel:.1e} (< 1e-6); "
        f"central_2 order {order2:.2f}; central_4 gain {e2[1] / e4:.0f}x at step 1e-4"
    )


def check_A12():
    args = ["sweep", "--L", "0.5:2:3:lin", "--beta", "0.05:50:6:log", "--no-timestamp"]
    with tempfile.TemporaryDirectory() as tmp:
        a, b = Path(tmp, "a.csv"), Path(tmp, "b.csv")
        codes = (cli.main(args + ["-o", str(a)]), cli.main(args + ["-o", str(b), "--jobs", "2"]))
        same = a.read_bytes() == b.read_bytes()
        size = a.stat().st_size
    ok = codes == (0, 0) and same
    return ok, f"two sweeps (serial, 2 workers) byte-identical={same}, {size} bytes, exit codes {codes}"


CHECKS = {f"A{i}": globals()[f"check_A{i}"] for i in range(1, 13)}


def report_line(cid, ok, detail):
    return f"{cid} {'PASS' if ok else 'FAIL'}: {detail}"


@pytest.mark.parametrize("cid", list(CHECKS))
def test_acceptance(cid):
    ok, detail = CHECKS[cid]()
    RESULTS[cid] = (ok, detail)
    print(report_line(cid, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for cid, fn in CHECKS.items():
        ok, detail = fn()
        failed += not ok
        print(report_line(cid, ok, detail))
    sys.exit(1 if failed else 0)
