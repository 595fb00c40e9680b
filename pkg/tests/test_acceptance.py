"""Acceptance gate: one test per release criterion.

Each test enforces the declared tolerance and runtime budget and prints a
single PASS line with the measured values (visible with ``pytest -s``).
Grid sizes below the library defaults are only used where the quadrature
has already converged; criterion 4 verifies that in-line.
"""

import csv
import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

import cyclocap as cc
from cyclocap.capacity import _capacity_from_eigs
from conftest import high_rate_model, low_rate_model, white_model

PI = math.pi


def _report(num: int, elapsed: float, budget: float, detail: str) -> None:
    assert elapsed < budget, f"criterion {num} exceeded {budget}s ({elapsed:.1f}s)"
    print(f"criterion {num} PASS ({elapsed:.1f}s < {budget:.0f}s): {detail}")


def _flat_eigs(value, n_theta=17):
    theta = np.linspace(0.0, np.pi, n_theta)
    return cc.SpectralEigs(
        theta=theta, eigs=np.full((n_theta, 1), float(value)), pn=1
    )


def test_criterion_1_white_noise_closed_forms():
    start = time.monotonic()
    rng = np.random.default_rng(101)
    worst_level = worst_cap = 0.0
    for i in range(20):
        power = float(rng.uniform(0.1, 50.0))
        var = float(rng.uniform(0.05, 10.0))
        if i < 10:
            eigs = _flat_eigs(var)
            level = cc.waterfill_level(eigs, power)
            _, c_use = _capacity_from_eigs(eigs, power)
        else:
            res = cc.synchronous_capacity(
                white_model(var=var), 1, Fraction(0), power, n_theta=64
            )
            level, c_use = res.delta_bar, res.c_per_use
        expected_c = 0.5 * math.log2(1.0 + power / var)
        worst_level = max(worst_level, abs(level - (power + var)) / (power + var))
        worst_cap = max(worst_cap, abs(c_use - expected_c) / expected_c)
    assert worst_level <= 1e-9
    assert worst_cap <= 1e-9
    _report(1, time.monotonic() - start, 1.0,
            f"20 pairs, worst level err {worst_level:.2e}, worst capacity err {worst_cap:.2e}")


def test_criterion_2_rate_anchor_values():
    start = time.monotonic()
    anchors = [
        (0.45, 0, 1, 5, 1.356),
        (0.75, 0, 1, 5, 1.170),
        (0.45, 1, 5, 5, 1.302),
        (0.75, 1, 5, 5, 1.039),
    ]
    details = []
    for tdc, num, den, p, expected in anchors:
        res = cc.synchronous_capacity(
            high_rate_model(tdc=tdc), p, Fraction(num, den), 10.0, n_theta=1024
        )
        rel = abs(res.c_per_use - expected) / expected
        details.append(f"ratio {p + num / den:g} tdc={tdc}: {res.c_per_use:.4f} vs {expected} ({rel:+.2%})")
        assert rel <= 0.03, details[-1]
    _report(2, time.monotonic() - start, 60.0, "; ".join(details))


def test_criterion_3_phase_effect():
    start = time.monotonic()
    details = []
    for tdc, expected in [(0.45, 1.170), (0.75, 0.980)]:
        res = cc.synchronous_capacity(
            high_rate_model(tdc=tdc, phi=PI / 20), 5, Fraction(0), 10.0, n_theta=1024
        )
        rel = abs(res.c_per_use - expected) / expected
        details.append(f"ratio 5 phi=pi/20 tdc={tdc}: {res.c_per_use:.4f} ({rel:+.2%})")
        assert rel <= 0.03, details[-1]
    for tdc, expected in [(0.45, 1.298), (0.75, 1.015)]:
        vals = {}
        for phi in (0.0, PI / 20):
            res = cc.synchronous_capacity(
                high_rate_model(tdc=tdc, phi=phi), 23, Fraction(1, 5), 10.0, n_theta=1024
            )
            vals[phi] = res.c_per_use
        agree = abs(vals[0.0] - vals[PI / 20]) / vals[0.0]
        assert agree <= 0.005
        for phi, val in vals.items():
            rel = abs(val - expected) / expected
            assert rel <= 0.03, f"ratio 23.2 tdc={tdc} phi={phi}: {val:.4f} vs {expected}"
        details.append(f"ratio 23.2 tdc={tdc}: {vals[0.0]:.4f} (phase agreement {agree:.2%})")
    _report(3, time.monotonic() - start, 120.0, "; ".join(details))


def _run_cn_sweep_cli(out_dir, tdc, phi_expr):
    cmd = [
        sys.executable, "-m", "cyclocap.cli", "cn-sweep",
        "--n-min", "1", "--n-max", "130", "--n-theta", "64", "--jobs", "2",
        "--tdc", str(tdc), "--phi", phi_expr, "--no-plot",
        "--out-dir", str(out_dir),
    ]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr[-2000:]
    with open(out_dir / "cn_sweep.csv", newline="") as fh:
        return [float(row["c_mbps"]) for row in csv.DictReader(fh)]


def test_criterion_4_liminf_anchors(tmp_path):
    start = time.monotonic()
    # quadrature convergence at the reduced frequency grid used below
    probe_model = low_rate_model(tdc=0.45)
    coarse = cc.capacity_for_index(probe_model, 2, PI / 7, 10.0, 60, n_theta=64)
    fine = cc.capacity_for_index(probe_model, 2, PI / 7, 10.0, 60, n_theta=1024)
    assert abs(coarse.c_per_use - fine.c_per_use) / fine.c_per_use <= 1e-6

    measured = {}
    for tdc, expected in [(0.45, 0.648), (0.75, 0.503)]:
        estimates = {}
        for phi_expr in ("0", "pi/20"):
            series = _run_cn_sweep_cli(
                tmp_path / f"{tdc}_{phi_expr.replace('/', '_')}", tdc, phi_expr
            )
            assert len(series) == 130
            estimates[phi_expr] = cc.liminf_estimate(series, window=30)
        cross = abs(estimates["0"] - estimates["pi/20"]) / estimates["0"]
        measured[tdc] = (expected, estimates, cross)
        print(
            f"criterion 4 measured tdc={tdc}: trailing-min {estimates['0']:.4f} / "
            f"{estimates['pi/20']:.4f} Mbps (anchor {expected}), "
            f"phase agreement {cross:.3%}"
        )

    for tdc, (expected, estimates, cross) in measured.items():
        for phi_expr, est in estimates.items():
            rel = abs(est - expected) / expected
            assert rel <= 0.05, (
                f"tdc={tdc} phi={phi_expr}: trailing-min {est:.4f} vs {expected} ({rel:.2%})"
            )
    for tdc, (_, estimates, cross) in measured.items():
        assert cross <= 0.005, (
            f"tdc={tdc}: trailing-window minima at n<=130 differ across phases by "
            f"{cross:.3%} (> 0.5%); the estimator is quadrature-converged, so the "
            f"finite-n window retains this much phase dependence"
        )
    details = "; ".join(
        f"tdc={tdc}: {est['0']:.4f}/{est['pi/20']:.4f} vs {exp} Mbps (cross {cr:.2%})"
        for tdc, (exp, est, cr) in measured.items()
    )
    _report(4, time.monotonic() - start, 600.0, details)


def test_criterion_5_memory_memoryless_crossover():
    start = time.monotonic()
    model85 = high_rate_model(tdc=0.75, phi=PI / 20)
    mem = cc.synchronous_capacity(model85, 8, Fraction(1, 2), 10.0, n_theta=1024)
    memless = cc.synchronous_capacity(model85, 8, Fraction(1, 2), 10.0, n_theta=1024, memoryless=True)
    agree = abs(mem.c_per_use - memless.c_per_use) / mem.c_per_use
    assert agree <= 0.005
    assert abs(mem.c_per_use - 1.014) / 1.014 <= 0.03

    # the reference ratio-29 values correspond to the low duty cycle
    model29 = high_rate_model(tdc=0.45, phi=PI / 20)
    mem29 = cc.synchronous_capacity(model29, 29, Fraction(0), 10.0, n_theta=1024)
    memless29 = cc.synchronous_capacity(model29, 29, Fraction(0), 10.0, n_theta=1024, memoryless=True)
    assert mem29.c_per_use > memless29.c_per_use
    assert abs(memless29.c_per_use - 1.285) / 1.285 <= 0.03
    assert abs(mem29.c_per_use - 1.310) / 1.310 <= 0.03
    # memory keeps its edge at the high duty cycle as well
    model29h = high_rate_model(tdc=0.75, phi=PI / 20)
    memh = cc.synchronous_capacity(model29h, 29, Fraction(0), 10.0, n_theta=1024)
    memlessh = cc.synchronous_capacity(model29h, 29, Fraction(0), 10.0, n_theta=1024, memoryless=True)
    assert memh.c_per_use > memlessh.c_per_use
    _report(
        5, time.monotonic() - start, 120.0,
        f"ratio 8.5: {mem.c_per_use:.4f}/{memless.c_per_use:.4f} (gap {agree:.2%}); "
        f"ratio 29: mem {mem29.c_per_use:.4f} vs memless {memless29.c_per_use:.4f}",
    )


def test_criterion_6_oracle_equivalence():
    start = time.monotonic()
    configs = [
        (low_rate_model(tdc=0.45), 2, Fraction(3, 7)),
        (low_rate_model(tdc=0.75), 2, Fraction(1, 2)),
        (high_rate_model(tdc=0.45), 5, Fraction(0)),
        (high_rate_model(tdc=0.75, phi=PI / 20), 5, Fraction(1, 5)),
        (low_rate_model(tdc=0.45, phi=0.1), 2, Fraction(1, 3)),
    ]
    worst = 0.0
    for model, p, eps in configs:
        spectral = cc.synchronous_capacity(model, p, eps, 10.0, n_theta=1024)
        dt = cc.dt_correlation(model, cc.SamplingSpec(p=p, eps=eps))
        cov = cc.block_noise_covariance(dt, 64 * spectral.pn)
        oracle = cc.finite_block_capacity(cov, 10.0)
        gap = abs(spectral.c_per_use - oracle) / spectral.c_per_use
        worst = max(worst, gap)
        assert gap <= 0.01, f"pn={spectral.pn}: spectral {spectral.c_per_use} vs oracle {oracle}"
    _report(6, time.monotonic() - start, 300.0,
            f"5 configurations, worst spectral-vs-block gap {worst:.3%}")


def test_criterion_7_information_density_identities():
    start = time.monotonic()
    rng = np.random.default_rng(202)
    worst_resid = 0.0
    for _ in range(100):
        k = int(rng.integers(4, 48))
        a = rng.standard_normal((k, k))
        b = rng.standard_normal((k, k))
        cov = cc.BlockNoiseCov(k=k, cov=a @ a.T + 0.05 * np.eye(k), tau0=0.0)
        c_x = b @ b.T
        resid = cc.info_density_trace_residual(cov, c_x)
        worst_resid = max(worst_resid, resid / k)
        assert resid <= 1e-8 * k
        stats = cc.info_density_stats(cov, c_x, 1, seed=0)
        assert 0.0 <= stats.analytic_var <= 3.0 / k

    dt = cc.dt_correlation(low_rate_model(tdc=0.75), cc.SamplingSpec(p=2, eps=PI / 7))
    sigmas = []
    for k in (16, 64, 256):
        cov = cc.block_noise_covariance(dt, k)
        c_x = cc.waterfilled_input_covariance(cov, 10.0)
        stats = cc.info_density_stats(cov, c_x, 100_000, seed=42)
        assert stats.analytic_var <= 3.0 / k
        sigma = math.sqrt(stats.analytic_var / stats.samples)
        pull = abs(stats.mc_mean - stats.analytic_mean) / sigma
        sigmas.append(pull)
        assert pull <= 4.0, f"k={k}: MC mean off by {pull:.2f} sigma"
    _report(7, time.monotonic() - start, 180.0,
            f"worst residual/k {worst_resid:.2e}; MC pulls {['%.2f' % s for s in sigmas]} sigma")


def test_criterion_8_condition_suite():
    start = time.monotonic()
    dt = cc.dt_correlation(low_rate_model(tdc=0.75), cc.SamplingSpec(p=2, eps=PI / 7))
    report = cc.run_condition_report(dt, 10.0)
    assert not report.decay_ok
    assert report.sdd_ok
    assert report.power_ok
    assert report.power_threshold == pytest.approx(7.833, abs=0.05)
    assert report.power_threshold < 10.0

    rng = np.random.default_rng(303)
    hits = 0
    for _ in range(100):
        trf = float(rng.uniform(0.005, 0.1))
        tdc = float(rng.uniform(0.0, min(0.75, 1.0 - 2 * trf)))
        model = cc.PulseCorrelationModel(
            tpw=5e-6, tdc=tdc, trf=trf,
            phi=float(rng.uniform(0.0, 1.0)),
            base_var=float(rng.uniform(0.5, 2.0)),
            amp=float(rng.uniform(0.0, 5.0)),
            alpha=float(10 ** rng.uniform(5.5, 7.5)),
            lambda_m=float(rng.uniform(1e-6, 4.9e-6)),
        )
        p = int(rng.integers(1, 5))
        eps = [Fraction(0), Fraction(1, 2), Fraction(1, 3), float(rng.random())][
            int(rng.integers(0, 4))
        ]
        if not cc.correlation_decay_margin(model, p, n_t=1024, n_lambda=1024)[1]:
            continue
        hits += 1
        dt_i = cc.dt_correlation(model, cc.SamplingSpec(p=p, eps=eps))
        assert cc.sdd_margin(dt_i, n_tau0=32)[1]
    assert hits >= 10
    _report(8, time.monotonic() - start, 120.0,
            f"decay fail + SDD pass + threshold {report.power_threshold:.3f} < 10; "
            f"sufficiency held on {hits}/100 decay-ok draws")


def test_criterion_9_structural_invariants(tmp_path):
    start = time.monotonic()
    # spectral positivity across the experiment configurations
    for model in (low_rate_model(0.45), low_rate_model(0.75),
                  high_rate_model(0.45), high_rate_model(0.75)):
        for n in (1, 5, 9):
            res = cc.capacity_for_index(model, 2, PI / 7, 10.0, n, n_theta=256)
            assert res.c_per_use > 0.0

    # frequency-symmetry of the eigenvalue surfaces
    dt = cc.dt_correlation(low_rate_model(0.75), cc.SamplingSpec(p=2, eps=Fraction(3, 7)))
    bc = cc.build_block_correlation(dt, 17)
    for theta in (0.4, 1.3, 2.7):
        plus = cc.hermitian_eigenvalues(cc.spectral_matrix(bc, theta))
        minus = cc.hermitian_eigenvalues(cc.spectral_matrix(bc, -theta))
        assert np.abs(plus - minus).max() <= 1e-12 * np.abs(plus).max()

    # quadrature recovers the zero-lag block correlation
    n_theta = 1024
    theta = np.linspace(0.0, np.pi, n_theta)
    w = np.full(n_theta, np.pi / (n_theta - 1))
    w[0] *= 0.5
    w[-1] *= 0.5
    acc = np.zeros((17, 17))
    for wj, th in zip(w, theta):
        acc += wj * cc.spectral_matrix(bc, th).real
    assert np.abs(acc / np.pi - bc.lag(0)).max() <= 1e-6 * np.abs(bc.lag(0)).max()

    # guard delay restores the phase
    tpw = 5e-6
    ts = tpw / (2 + PI / 7)
    for tau_opt in np.linspace(0.0, tpw, 41)[:-1]:
        delay = cc.guard_delay(float(tau_opt), k=64, tau_m=3, ts=ts, tpw=tpw)
        back = math.fmod(tau_opt + 67 * ts + delay, tpw)
        err = min(abs(back - tau_opt), abs(back - tau_opt - tpw), abs(back - tau_opt + tpw))
        assert err <= 1e-12 * tpw

    # fixed seed reproduces byte-identical CSV output
    cmd = [sys.executable, "-m", "cyclocap.cli", "finite-block",
           "--k", "16", "--mc-samples", "5000", "--seed", "42", "--no-plot"]
    for sub in ("a", "b"):
        out = tmp_path / sub
        out.mkdir()
        proc = subprocess.run(cmd + ["--out-dir", str(out)], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr[-2000:]
    assert (tmp_path / "a" / "finite_block.csv").read_bytes() == \
        (tmp_path / "b" / "finite_block.csv").read_bytes()

    _report(9, time.monotonic() - start, 180.0,
            "positivity, frequency symmetry, quadrature consistency, "
            "guard delay and CSV determinism all hold")
