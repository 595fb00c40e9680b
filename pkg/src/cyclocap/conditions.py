"""Hypothesis checks for the limiting capacity characterization.

Three checks, all on grids: an analytic correlation-decay margin (a
sufficient condition that is often conservative), a power threshold that
guarantees waterfilling floods every noise mode, and a direct strict
diagonal dominance (SDD) scan of finite noise covariance windows, which is
the weaker condition actually needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .noise_model import DtCorrelation, PulseCorrelationModel, ct_correlation, memory_length, sample_correlation


@dataclass(frozen=True)
class ConditionReport:
    decay_margin: float
    decay_ok: bool
    power_threshold: float
    power_ok: bool
    sdd_min_margin: float
    sdd_ok: bool
    n_t_grid: int
    n_lambda_grid: int
    sdd_k: int
    sdd_n_tau0: int


def _tail_correlation_max(
    model: PulseCorrelationModel,
    p: int,
    t_grid: np.ndarray,
    n_lambda: int,
) -> np.ndarray:
    """max over |lambda| > tpw/(p+1) of |c(t, lambda)|, per grid time.

    Both lag signs are scanned; the domain is capped at the correlation
    length beyond which the correlation vanishes.
    """
    lam_lo = model.tpw / (p + 1)
    if lam_lo >= model.lambda_m:
        return np.zeros_like(t_grid)
    lam = np.linspace(lam_lo, model.lambda_m, n_lambda + 1)[1:]
    pos = np.abs(ct_correlation(model, t_grid[:, None], lam[None, :])).max(axis=1)
    neg = np.abs(ct_correlation(model, t_grid[:, None], -lam[None, :])).max(axis=1)
    return np.maximum(pos, neg)


def correlation_decay_margin(
    model: PulseCorrelationModel,
    p: int,
    n_t: int = 2048,
    n_lambda: int = 2048,
) -> tuple[float, bool]:
    """min over t of { c(t,0) - 2*tau_m * max_{|lambda|>tpw/(p+1)} |c(t,lambda)| }.

    Positive margin guarantees every finite noise covariance window is
    strictly diagonally dominant at every sampling phase.
    """
    tau_m = memory_length(model, p)
    t_grid = np.linspace(0.0, model.tpw, n_t)
    tail = _tail_correlation_max(model, p, t_grid, n_lambda)
    margins = model.variance(t_grid) - 2.0 * tau_m * tail
    margin = float(margins.min())
    return margin, margin > 0.0


def power_condition(
    model: PulseCorrelationModel,
    p: int,
    power: float,
    n_t: int = 2048,
    n_lambda: int = 2048,
) -> tuple[float, bool]:
    """Threshold max_t { c(t,0) + tau_m * max |c(t,lambda)| } and P > threshold.

    Above the threshold the waterfilling level exceeds every noise
    eigenvalue, so power is allocated to all modes.
    """
    tau_m = memory_length(model, p)
    t_grid = np.linspace(0.0, model.tpw, n_t)
    tail = _tail_correlation_max(model, p, t_grid, n_lambda)
    threshold = float((model.variance(t_grid) + tau_m * tail).max())
    return threshold, power > threshold


def sdd_margin(
    dt: DtCorrelation,
    k: int | None = None,
    n_tau0: int = 64,
) -> tuple[float, bool]:
    """Worst row margin |diag| - sum|offdiag| over a phase grid.

    Margins stabilize once the window is a few memory lengths long, so the
    default is k = 4*tau_m + 8.  Returns the minimum over all rows and all
    phases on the grid.
    """
    if k is None:
        k = 4 * dt.tau_m + 8
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    u = np.arange(k)[None, :, None]
    v = np.arange(k)[None, None, :]
    tau0 = (np.arange(n_tau0) * (dt.model.tpw / n_tau0))[:, None, None]
    covs = sample_correlation(dt, v, u - v, tau0=tau0)
    diag = np.abs(np.diagonal(covs, axis1=1, axis2=2))
    off = np.abs(covs).sum(axis=2) - diag
    worst = float((diag - off).min())
    return worst, worst > 0.0


def run_condition_report(
    dt: DtCorrelation,
    power: float,
    n_t: int = 2048,
    n_lambda: int = 2048,
    sdd_k: int | None = None,
    sdd_n_tau0: int = 64,
) -> ConditionReport:
    """Evaluate all three checks for one configuration.

    The decay and power checks share one evaluation of the tail-correlation
    grid, which dominates the cost.
    """
    model = dt.model
    p = dt.spec.p
    tau_m = memory_length(model, p)
    t_grid = np.linspace(0.0, model.tpw, n_t)
    tail = _tail_correlation_max(model, p, t_grid, n_lambda)
    variances = model.variance(t_grid)
    decay = float((variances - 2.0 * tau_m * tail).min())
    decay_ok = decay > 0.0
    threshold = float((variances + tau_m * tail).max())
    power_ok = power > threshold
    k = sdd_k if sdd_k is not None else 4 * dt.tau_m + 8
    sdd, sdd_ok = sdd_margin(dt, k=k, n_tau0=sdd_n_tau0)
    return ConditionReport(
        decay_margin=decay,
        decay_ok=decay_ok,
        power_threshold=threshold,
        power_ok=power_ok,
        sdd_min_margin=sdd,
        sdd_ok=sdd_ok,
        n_t_grid=n_t,
        n_lambda_grid=n_lambda,
        sdd_k=k,
        sdd_n_tau0=sdd_n_tau0,
    )
