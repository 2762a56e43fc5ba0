"""Acceptance criteria 1-9, one recorded PASS/FAIL line each (natural units)."""

import itertools
import json
import math
import subprocess
import sys

import mpmath as mp
import numpy as np

from swcoulomb import verify as vf
from swcoulomb.cli import main
from swcoulomb.model import ModelParams
from swcoulomb.quantum import SphericalState, energy, enumerate_level, m_chain_spherical
from swcoulomb.specfun import SeriesControl, jacobi_poly, kummer_m, laguerre_poly, whittaker_m

BETA_VALUES = (0.0, 1.5, 4.0)


def _cli_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# 1 -----------------------------------------------------------------------------------


def test_criterion_1_coulomb_reduction(capsys, record_criterion):
    code, out = _cli_json(capsys, "spectrum", "--n", "3", "--gamma", "1", "--beta", "0,0", "--branch", "-,-", "--levels", "5")
    rows = json.loads(out)["rows"]
    gaps = [abs(r["energy"] + 1 / (2 * N * N)) for r, N in zip(rows, range(1, 7))]
    Ns = [r["N"] for r in rows]
    ok = code == 0 and Ns == [1, 2, 3, 4, 5, 6] and max(gaps) <= 1e-14
    record_criterion(1, ok, f"hydrogen limit N=1..6: max |E_N + 1/(2N^2)| = {max(gaps):.1e} (tol 1e-14)")
    assert ok


# 2 -----------------------------------------------------------------------------------


def test_criterion_2_hamiltonian_residual(record_criterion):
    worst, count, failed = 0.0, 0, []
    for n in (3, 4):
        for beta in itertools.product(BETA_VALUES, repeat=n - 1):
            P = ModelParams(n, 1.0, beta)
            for system in ("parabolic", "spherical"):
                for nu in range(3):
                    for s in enumerate_level(P, system, nu).states:
                        pts = vf.sample_points(P, system, s, 50, seed=0)
                        rep = vf.hamiltonian_residual(P, system, s, pts, tolerance=1e-5)
                        worst = max(worst, rep.max_residual)
                        count += 1
                        if not rep.passed:
                            failed.append((n, beta, system, s.labels()))
    ok = not failed
    record_criterion(2, ok, f"H psi = E psi over {count} states x 50 points: max rel residual {worst:.2e} (tol 1e-5)")
    assert ok, failed[:5]


# 3 -----------------------------------------------------------------------------------


def test_criterion_3_orthonormality(record_criterion):
    worst, worst_gap, pairs = 0.0, 0.0, 0
    models = [ModelParams(3, 1.0, (0.0, 0.0)), ModelParams(3, 1.0, (1.5, 4.0)),
              ModelParams(4, 1.0, (0.0, 0.0, 0.0)), ModelParams(4, 1.0, (1.5, 0.0, 4.0))]
    errors = []
    for P in models:
        for system in ("parabolic", "spherical"):
            states = [s for nu in range(4) for s in enumerate_level(P, system, nu).states]
            for a, b in itertools.combinations_with_replacement(states, 2):
                try:
                    rep = vf.orthonormality_check(P, system, a, b, tolerance=1e-7)
                except ArithmeticError as exc:
                    errors.append(str(exc))
                    continue
                worst = max(worst, rep.max_residual)
                worst_gap = max(worst_gap, rep.details["order_gap"])
                pairs += 1
    ok = not errors and worst <= 1e-7 and worst_gap <= 1e-8
    record_criterion(
        3, ok, f"{pairs} pairs (n=3,4; nu<=3): max |<a|b> - delta| {worst:.1e} (tol 1e-7), order gap {worst_gap:.1e} (tol 1e-8)"
    )
    assert ok, errors[:3]


# 4 -----------------------------------------------------------------------------------


def test_criterion_4_radial_oracle(record_criterion):
    worst, monotone, sectors = 0.0, True, []
    for p in (1, 2):
        # p(p-1) = 2 beta; p = 1 is the upper root of beta = 0
        P = ModelParams(3, 1.0, (p * (p - 1) / 2.0,) * 2, branch=("+", "+"))
        assert P.p == (float(p), float(p))
        for J in ((0, 0), (1, 0)):
            m1 = m_chain_spherical(P, SphericalState(0, J))[0]
            sectors.append(m1)
            exact = np.array([energy(P, k + m1 + 0.5) for k in range(3)])
            runs = [np.array(vf.radial_oracle(P, m1, vf.OracleConfig(grid_points=G))) for G in (5000, 10000, 20000)]
            errs = [np.max(np.abs(v - exact) / np.abs(exact)) for v in runs]
            # each eigenvalue moves one way under doubling and its error shrinks
            steps = np.sign(np.diff(np.array(runs), axis=0))
            monotone &= bool(np.all(steps == steps[0]))
            monotone &= all(np.all(np.abs(b - exact) < np.abs(a - exact)) for a, b in zip(runs, runs[1:]))
            worst = max(worst, errs[-1])
    ok = worst <= 1e-3 and monotone
    record_criterion(
        4, ok, f"m1 sectors {sectors}: max rel error {worst:.1e} at 20000 points (tol 1e-3), monotone under doubling: {monotone}"
    )
    assert ok


# 5 -----------------------------------------------------------------------------------


def test_criterion_5_green_poles(record_criterion):
    worst_gap, worst_cond, sectors = 0.0, 0.0, []
    for P in (ModelParams(3, 1.0, (0.0, 0.0)), ModelParams(3, 1.0, (1.5, 4.0))):
        for J in ((0, 0), (1, 0)):
            m1 = m_chain_spherical(P, SphericalState(0, J))[0]
            sectors.append(m1)
            for pole in vf.pole_scan(P, m1, 3):
                worst_gap = max(worst_gap, pole.gap / abs(pole.predicted))
                worst_cond = max(worst_cond, pole.gamma_condition)
    ok = worst_gap <= 1e-6 and worst_cond <= 1e-8
    record_criterion(
        5, ok, f"3 poles in m1 sectors {sectors}: max rel gap {worst_gap:.1e} (tol 1e-6), "
        f"|kappa + m1 + 1/2 + N_r| {worst_cond:.1e} (tol 1e-8)"
    )
    assert ok


# 6 -----------------------------------------------------------------------------------


def test_criterion_6_hille_hardy(record_criterion):
    rng = np.random.default_rng(0)
    residuals = []
    for _ in range(20):
        a, x, y = rng.uniform(-0.5, 5.0), rng.uniform(0.0, 5.0), rng.uniform(0.0, 5.0)
        z = rng.uniform(-0.8, 0.8)
        residuals.append(vf.hille_hardy_identity(a, x, y, z, 120).max_residual)
    worst = max(residuals)
    ok = worst <= 1e-10
    record_criterion(6, ok, f"20 draws (seed 0, 120 terms): max rel error {worst:.1e} (tol 1e-10)")
    assert ok


# 7 -----------------------------------------------------------------------------------


def test_criterion_7_spectrum_cross_check(record_criterion):
    sets_equal, flagged_ok, failed = True, True, []
    for n in (3, 4, 5):
        P = ModelParams(n, 1.0, (0.0,) * (n - 1))
        par = {enumerate_level(P, "parabolic", nu).energy for nu in range(11)}
        sph = {enumerate_level(P, "spherical", nu).energy for nu in range(11)}
        sets_equal &= par == sph
        rep = vf.spectrum_cross_check(P, 10)
        if not rep.passed:
            failed.append(n)
        rows = rep.details["degeneracy"]
        flagged_ok &= all(r["mismatch"] == (r["parabolic"] != r["spherical"]) for r in rows)
        if n == 3:
            r1 = rows[1]
            flagged_ok &= (r1["parabolic"], r1["spherical"], r1["mismatch"]) == (2, 1, True)
    ok = sets_equal and flagged_ok and not failed
    record_criterion(
        7, ok, f"energy sets equal for nu<=10, n=3,4,5: {sets_equal}; n=3 nu=1 degeneracy 2 vs 1 flagged, not failed: {flagged_ok}"
    )
    assert ok


# 8 -----------------------------------------------------------------------------------


def _jacobi_series(J, a, b, x):
    a, b, z = mp.mpf(a), mp.mpf(b), (1 - mp.mpf(x)) / 2
    term, total = mp.mpf(1), mp.mpf(1)
    for k in range(J):
        term *= (-J + k) * (J + a + b + 1 + k) / ((a + 1 + k) * (k + 1)) * z
        total += term
    return float(mp.rf(a + 1, J) / mp.factorial(J) * total)


def _laguerre_series(N, alpha, x):
    a, x = mp.mpf(alpha), mp.mpf(x)
    return float(mp.fsum((-1) ** k * mp.binomial(N + a, N - k) * x**k / mp.factorial(k) for k in range(N + 1)))


def test_criterion_8_special_functions(record_criterion):
    mp.mp.dps = 30
    rng = np.random.default_rng(8)
    worst = {}

    def note(name, err):
        worst[name] = max(worst.get(name, 0.0), err)

    for _ in range(300):
        J, a, b, x = int(rng.integers(0, 21)), rng.uniform(-0.9, 5), rng.uniform(-0.9, 5), rng.uniform(-1, 1)
        scale = max(1.0, abs(jacobi_poly(J, a, b, 1.0)), abs(jacobi_poly(J, a, b, -1.0)))
        note("jacobi symmetry", abs(jacobi_poly(J, a, b, -x) - (-1) ** J * jacobi_poly(J, b, a, x)) / scale)
    for _ in range(300):
        J, a, b, x = int(rng.integers(0, 11)), rng.uniform(-0.9, 5), rng.uniform(-0.9, 5), rng.uniform(-1, 1)
        ref = _jacobi_series(J, a, b, x)
        note("recurrence vs series", abs(jacobi_poly(J, a, b, x) - ref) / max(1.0, abs(_jacobi_series(J, a, b, 1.0))))
    for _ in range(300):
        N, al, x = int(rng.integers(0, 21)), rng.uniform(-0.9, 6), rng.uniform(0, 0.5)
        ref = _laguerre_series(N, al, x)
        note("laguerre vs series", abs(laguerre_poly(N, al, x) - ref) / max(1.0, abs(ref)))
    for _ in range(300):
        a, b, x = rng.uniform(-6, 6), rng.uniform(0.2, 8), rng.uniform(-10, 10)
        lhs, rhs = kummer_m(a, b, x), math.exp(x) * kummer_m(b - a, b, -x)
        # absolute floor at rounding level of the largest series term
        floor = 1e-6 * math.exp(x) * kummer_m(abs(b - a), b, abs(x))
        note("kummer transformation", abs(lhs - rhs) / max(abs(lhs), abs(rhs), floor))
    tight = SeriesControl(max_terms=20000, rel_tol=1e-30)
    for _ in range(60):
        k, m, x = rng.uniform(-6, 10), rng.uniform(0, 8), rng.uniform(0.05, 30)
        v = whittaker_m(k, m, x)
        note("whittaker self-test", abs(v - whittaker_m(k, m, x, tight)) / max(abs(v), 1e-300))
    top = max(worst.values())
    ok = top <= 1e-10
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    record_criterion(8, ok, f"invariant sweep max rel error {top:.1e} (tol 1e-10): {detail}")
    assert ok


# 9 -----------------------------------------------------------------------------------


def test_criterion_9_determinism(capsys, record_criterion):
    runs = [
        ["verify", "--suite", "residual", "--n", "3", "--beta", "1.5,0", "--levels", "1", "--seed", "5"],
        ["verify", "--suite", "hille-hardy", "--seed", "3", "--format", "csv"],
        ["eval", "--n", "4", "--beta", "1.5,0,4", "--system", "parabolic", "--state", "1,0,1,0", "--grid", "ray:1,2,3,-1:0.5:20:30"],
        ["spectrum", "--n", "5", "--beta", "0,1.5,4,0", "--levels", "6", "--format", "csv"],
    ]
    identical = True
    for argv in runs:
        outs = [_cli_json(capsys, *argv)[1] for _ in range(2)]
        proc = subprocess.run([sys.executable, "-m", "swcoulomb", *argv], capture_output=True, check=False)
        identical &= outs[0] == outs[1] == proc.stdout.decode()
    ok = identical
    record_criterion(9, ok, f"{len(runs)} commands x 3 runs (2 in-process, 1 subprocess): byte-identical {identical}")
    assert ok
