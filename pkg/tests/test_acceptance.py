"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py).  Run alone with

    pytest tests/test_acceptance.py -v
"""

import random
import time

import numpy as np
import pytest

from afm_sqrtwell import (
    PotentialParams,
    PrincipalN,
    QuantumNumbers,
    afm_energy,
    afm_energy_simple,
    asymptotic_linear,
    bounds,
    harmonic_limit,
    reduce,
    solve_G,
    solve_reduced,
    spectrum,
)
from afm_sqrtwell.fit import fit_AC, hyperbolic_AC
from afm_sqrtwell.relmap import SalpeterParams, from_salpeter, salpeter_spectrum, to_salpeter

from oracles import airy_zeros
from reference_data import EXACT, FITTED, LOWER, STATES, UPPER

RESULTS: list[str] = []

Y_GRID = np.concatenate([[0.0], np.logspace(-3, 6, 181)])


def record(label: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    assert ok, detail


def reduced(beta):
    return PotentialParams(2.0, 1.0, beta)


def test_ac01_exact_table_lines():
    start = time.perf_counter()
    errors = [abs(solve_reduced(1.0, QuantumNumbers(n, l)).value - EXACT[n][l]) for n, l in STATES]
    elapsed = time.perf_counter() - start
    worst = max(errors)
    record(
        "AC1 exact lines at beta=1",
        worst <= 1e-5 and elapsed < 30,
        f"max |err| = {worst:.2e} (tol 1e-5), {elapsed:.2f} s (budget 30 s)",
    )


def test_ac02_closed_form_table_lines():
    start = time.perf_counter()
    p = reduced(1.0)
    worst = {}
    for name, rule, table in [
        ("upper", PrincipalN.harmonic(), UPPER),
        ("fitted", PrincipalN.fitted(), FITTED),
        ("lower", PrincipalN.coulomb(), LOWER),
    ]:
        worst[name] = max(abs(afm_energy(p, QuantumNumbers(n, l), rule).value - table[n][l]) for n, l in STATES)
    elapsed = time.perf_counter() - start
    record(
        "AC2 closed-form lines at beta=1",
        max(worst.values()) <= 1e-5 and elapsed < 1,
        ", ".join(f"{k} max |err| = {v:.1e}" for k, v in worst.items()) + f" (tol 1e-5), {elapsed:.3f} s",
    )


def test_ac03_bound_sandwich():
    start = time.perf_counter()
    violations, count = [], 0
    for beta in (0.0, 0.1, 1.0, 10.0, 100.0):
        exact = spectrum(beta, 4, 4)
        for (n, l), eps in exact.entries:
            lower, upper = bounds(reduced(beta), QuantumNumbers(n, l))
            count += 1
            if not lower.value <= eps <= upper.value:
                violations.append((beta, n, l))
    elapsed = time.perf_counter() - start
    record(
        "AC3 lower <= exact <= upper",
        not violations and elapsed < 120,
        f"{count - len(violations)}/{count} states bracketed, {elapsed:.2f} s (budget 120 s)",
    )


@pytest.mark.xfail(
    strict=True,
    reason="printed fitted and exact lines differ by 1.43% at (n, l) = (1, 0); AC2 reproduces those lines",
)
def test_ac04_fitted_accuracy_one_percent():
    exact = spectrum(1.0, 4, 4)
    worst = max(
        abs(afm_energy(reduced(1.0), QuantumNumbers(n, l), PrincipalN.fitted()).value - eps) / eps
        for (n, l), eps in exact.entries
    )
    printed = max(abs(f - e) / e for fr, er in zip(FITTED, EXACT) for f, e in zip(fr, er))
    record(
        "AC4 fitted vs exact at beta=1",
        worst <= 0.01,
        f"max relative error {worst:.4%} (tol 1%); printed table gives {printed:.4%} (expected failure)",
    )


def test_ac05_simple_formula_gap():
    gaps = []
    qn, rule = QuantumNumbers(0, 0), PrincipalN.fitted(1.0, 1.0)
    for Y in Y_GRID:
        # m = 2, a = 1, N = 1 gives Y = 16 b / 3
        p = PotentialParams(2.0, 1.0, 3.0 * Y / 16.0)
        full = afm_energy(p, qn, rule).value
        gaps.append(abs(afm_energy_simple(p, qn, rule, eta=1.0).value - full) / full)
    worst = max(gaps)
    record("AC5 simplified formula, eta=1", worst <= 0.02, f"max relative gap {worst:.4%} (tol 2%)")


def test_ac06_quartic_and_cubic_residuals():
    quartic, cubic = 0.0, 0.0
    for Y in Y_GRID:
        sol = solve_G(Y)
        quartic = max(quartic, abs(4 * sol.G**4 - 8 * sol.G - 3 * Y) / max(1.0, Y))
        cubic = max(cubic, abs(sol.V**3 + 3 * Y * sol.V - 4) / max(1.0, Y**1.5))
    record(
        "AC6 quartic/cubic residuals",
        quartic <= 1e-10 and cubic <= 1e-10,
        f"scaled quartic {quartic:.1e}, scaled cubic {cubic:.1e} (tol 1e-10)",
    )


def test_ac07_airy_oracle():
    published = (2.338107, 4.087949, 5.520560)
    oracle = airy_zeros(3)
    values = [solve_reduced(0.0, QuantumNumbers(n, 0)).value for n in range(3)]
    vs_published = max(abs(v - z / 4 ** (1 / 3)) for v, z in zip(values, published))
    vs_oracle = max(abs(v - z / 4 ** (1 / 3)) for v, z in zip(values, oracle))
    record(
        "AC7 beta=0 Airy energies",
        vs_published <= 1e-5 and vs_oracle <= 1e-5,
        f"max |err| vs listed zeros {vs_published:.1e}, vs series oracle {vs_oracle:.1e} (tol 1e-5)",
    )


def test_ac08_asymptotic_limits():
    gaps = []
    for beta in (1e2, 1e4, 1e6):
        p, qn = reduced(beta), QuantumNumbers(0, 0)
        ref = harmonic_limit(p, qn)
        gaps.append(abs(afm_energy(p, qn, PrincipalN.harmonic()).value - ref) / ref)
    harmonic_ok = all(g > 0 for g in gaps) and gaps[0] > gaps[1] > gaps[2]
    p = PotentialParams(2.0, 1.0, 1e-12)
    linear_rel = abs(afm_energy(p, QuantumNumbers(0, 0), PrincipalN.harmonic()).value - asymptotic_linear(p, 1.5))
    linear_rel /= asymptotic_linear(p, 1.5)
    record(
        "AC8 harmonic and linear limits",
        harmonic_ok and linear_rel <= 1e-8,
        "harmonic gaps " + ", ".join(f"{g:.1e}" for g in gaps) + f"; linear relative diff {linear_rel:.1e} (tol 1e-8)",
    )


def test_ac09_scaling_law():
    rng = random.Random(20240517)
    worst = 0.0
    for _ in range(20):
        p = PotentialParams(10 ** rng.uniform(-2, 2), 10 ** rng.uniform(-2, 2), 10 ** rng.uniform(-3, 3))
        qn = QuantumNumbers(rng.randint(0, 5), rng.randint(0, 5))
        r = reduce(p)
        for rule in (PrincipalN.harmonic(), PrincipalN.coulomb(), PrincipalN.fitted()):
            direct = afm_energy(p, qn, rule).value
            scaled = r.scale * afm_energy(reduced(r.beta), qn, rule).value
            worst = max(worst, abs(direct - scaled) / direct)
    record("AC9 scaling law for 20 random triples", worst <= 1e-12, f"max relative diff {worst:.1e} (tol 1e-12)")


def test_ac10_fit_pipeline():
    start = time.perf_counter()
    details, ok = [], True
    for beta in (0.0, 1.0, 100.0):
        s = fit_AC(beta, spectrum(beta, 4, 4))
        A_ref, C_ref = hyperbolic_AC(beta)
        dA, dC = abs(s.A - A_ref), abs(s.C - C_ref)
        ok &= dA <= 0.05 and dC <= 0.05
        details.append(f"beta={beta:g}: A={s.A:.4f} (|d|={dA:.3f}), C={s.C:.4f} (|d|={dC:.3f})")
        if beta == 0.0:
            ok &= abs(s.A - 1.789) <= 0.05 and abs(s.C - 1.359) <= 0.05
    elapsed = time.perf_counter() - start
    ok &= elapsed < 120
    record("AC10 fitted A, C vs hyperbolic forms", ok, "; ".join(details) + f"; {elapsed:.2f} s (tol 0.05)")


def test_ac11_salpeter_duality():
    sp = SalpeterParams(1.0, 1.0, 0.25)
    mapped = from_salpeter(sp)
    identical = all(
        salpeter_spectrum(sp, QuantumNumbers(n, l), PrincipalN.harmonic())
        == afm_energy(mapped, QuantumNumbers(n, l), PrincipalN.harmonic())
        for n, l in STATES
    )
    column = max(
        abs(salpeter_spectrum(sp, QuantumNumbers(n, l), PrincipalN.harmonic()).value - UPPER[n][l]) for n, l in STATES
    )
    rng = np.random.default_rng(7)
    worst = 0.0
    for m, a, b in zip(10 ** rng.uniform(-2, 2, 100), 10 ** rng.uniform(-2, 2, 100), 10 ** rng.uniform(-3, 3, 100)):
        back = from_salpeter(to_salpeter(PotentialParams(m, a, b)))
        worst = max(worst, abs(back.m - m) / m, abs(back.a - a) / a, abs(back.b - b) / b)
    record(
        "AC11 Salpeter duality",
        identical and column <= 1e-5 and worst <= 1e-12,
        f"same code path: {identical}, upper column max |err| {column:.1e}, round trip {worst:.1e} (tol 1e-12)",
    )


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
