"""Finite-block capacity oracle and mutual-information density statistics.

Works directly on the k x k covariance of a noise window: Gaussian-input
capacity by eigenvalue waterfilling, the analytic mean/variance of the
normalized information density, a Monte-Carlo estimate of the same
quantities, and the deterministic guard delay that re-aligns the sampling
phase between blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import solve_triangular

from .dcd import ModelInvalidError
from .noise_model import DtCorrelation, sample_correlation

LOG2E = math.log2(math.e)

# dense eigendecompositions get expensive past this block size
DENSE_K_CAP = 4096


class BlockSizeError(ValueError):
    """Requested block length exceeds the dense-solver cap."""


@dataclass(frozen=True)
class BlockNoiseCov:
    """Covariance of k consecutive noise samples at a fixed sampling phase."""

    k: int
    cov: np.ndarray
    tau0: float


def block_noise_covariance(dt: DtCorrelation, k: int, tau0: float | None = None) -> BlockNoiseCov:
    """Build the k x k noise covariance with entries c[v, u - v].

    Symmetric by the lag symmetry of the sampled correlation; rejects block
    sizes beyond the dense cap and covariances that are not strictly
    positive definite.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > DENSE_K_CAP:
        raise BlockSizeError(
            f"k={k} exceeds the dense eigendecomposition cap ({DENSE_K_CAP})"
        )
    u = np.arange(k)[:, None]
    v = np.arange(k)[None, :]
    cov = np.asarray(sample_correlation(dt, v, u - v, tau0=tau0), dtype=float)
    if np.linalg.eigvalsh(cov).min() <= 0.0:
        raise ModelInvalidError(
            f"noise covariance for k={k} is not positive definite"
        )
    t0 = dt.spec.tau0 if tau0 is None else tau0
    return BlockNoiseCov(k=k, cov=cov, tau0=t0)


def _waterfill_eigen(mu: np.ndarray, power: float) -> float:
    """Level filling the smallest noise eigenvalues first, (1/k)*sum gamma = P."""
    k = mu.size
    mu_sorted = np.sort(mu)
    csum = np.cumsum(mu_sorted)
    for m in range(1, k + 1):
        level = (k * power + csum[m - 1]) / m
        if level >= mu_sorted[m - 1] and (m == k or level <= mu_sorted[m]):
            return float(level)
    # unreachable: the last candidate always fills every mode
    raise RuntimeError("eigenvalue waterfilling found no feasible level")


def finite_block_capacity(cov: BlockNoiseCov, power: float) -> float:
    """Gaussian-input capacity of the k-sample block in bits per channel use.

    Eigendecomposes the noise covariance, waterfills the per-mode input
    powers against the average power budget and sums the per-mode rates.
    The value converges to the spectral capacity as the block grows, which
    makes it a cross-check oracle for the frequency-domain path.
    """
    if power <= 0.0:
        raise ValueError(f"power must be positive, got {power}")
    mu = np.linalg.eigvalsh(cov.cov)
    level = _waterfill_eigen(mu, power)
    return float(np.clip(np.log2(level / mu), 0.0, None).sum() / (2.0 * cov.k))


def waterfilled_input_covariance(cov: BlockNoiseCov, power: float) -> np.ndarray:
    """Capacity-achieving input covariance for the k-sample block."""
    mu, vecs = np.linalg.eigh(cov.cov)
    level = _waterfill_eigen(mu, power)
    gains = np.clip(level - mu, 0.0, None)
    return (vecs * gains) @ vecs.T


class PhaseRateSummary(NamedTuple):
    average: float
    minimum: float
    rates: np.ndarray
    tau0_grid: np.ndarray


def phase_average_rate(dt: DtCorrelation, power: float, k: int, n_tau0: int = 64) -> PhaseRateSummary:
    """Finite-block capacity averaged and minimized over a phase grid.

    The average corresponds to rate adaptation across message slots; the
    minimum to a fixed rate that must survive the worst phase.
    """
    if n_tau0 < 2:
        raise ValueError(f"n_tau0 must be >= 2, got {n_tau0}")
    tpw = dt.model.tpw
    grid = np.arange(n_tau0) * (tpw / n_tau0)
    rates = np.array([
        finite_block_capacity(block_noise_covariance(dt, k, tau0=float(t)), power)
        for t in grid
    ])
    return PhaseRateSummary(
        average=float(rates.mean()),
        minimum=float(rates.min()),
        rates=rates,
        tau0_grid=grid,
    )


@dataclass(frozen=True)
class InfoDensityStats:
    """Analytic and Monte-Carlo statistics of the information density rate."""

    k: int
    analytic_mean: float  # bits per channel use
    analytic_var: float   # (bits per channel use)^2
    mc_mean: float
    mc_var: float
    samples: int
    seed: int


def _chol_logdet(chol: np.ndarray) -> float:
    """log2 det from Cholesky pivots; immune to determinant overflow."""
    return 2.0 * float(np.log2(np.diag(chol)).sum())


def info_density_stats(
    cov: BlockNoiseCov,
    c_x: np.ndarray,
    mc_samples: int,
    seed: int,
    batch: int = 8192,
) -> InfoDensityStats:
    """Mean and variance of the normalized information density, both ways.

    The density rate for one draw is

        Z = (1/k) * [ (1/2) log(det C_Y / det C_W)
                      + (log2 e / 2) * (y' C_Y^{-1} y - w' C_W^{-1} w) ]

    with y = x + w.  Its expectation is the normalized mutual information
    and its variance is (log2 e)^2 * (k - Tr{(I + C_W^{-1} C_X)^{-1}}) / k^2,
    which is bounded by 3/k.

    Monte-Carlo draws use independent child streams spawned from a single
    seed (one per batch), so runs are reproducible for a fixed seed and the
    batched reduction is order-independent.
    """
    c_x = np.asarray(c_x, dtype=float)
    k = cov.k
    if c_x.shape != (k, k):
        raise ValueError(f"input covariance shape {c_x.shape} does not match k={k}")
    if mc_samples < 1:
        raise ValueError(f"mc_samples must be >= 1, got {mc_samples}")
    c_w = cov.cov
    c_y = c_w + c_x

    chol_w = np.linalg.cholesky(c_w)
    chol_y = np.linalg.cholesky(c_y)
    analytic_mean = (_chol_logdet(chol_y) - _chol_logdet(chol_w)) / (2.0 * k)
    # Tr{(I + C_W^{-1} C_X)^{-1}} = Tr{C_Y^{-1} C_W}
    trace_term = float(np.trace(np.linalg.solve(c_y, c_w)))
    analytic_var = (LOG2E ** 2) * (k - trace_term) / (k * k)

    # eigen square root tolerates the rank deficiency of waterfilled inputs
    lam_x, vecs_x = np.linalg.eigh(c_x)
    sqrt_x = vecs_x * np.sqrt(np.clip(lam_x, 0.0, None))

    count = 0
    mean = 0.0
    m2 = 0.0
    streams = np.random.SeedSequence(seed).spawn(-(-mc_samples // batch))
    for idx, ss in enumerate(streams):
        rng = np.random.Generator(np.random.Philox(ss))
        size = min(batch, mc_samples - idx * batch)
        x = sqrt_x @ rng.standard_normal((k, size))
        w = chol_w @ rng.standard_normal((k, size))
        y = x + w
        qy = (solve_triangular(chol_y, y, lower=True) ** 2).sum(axis=0)
        qw = (solve_triangular(chol_w, w, lower=True) ** 2).sum(axis=0)
        z = analytic_mean + (LOG2E / (2.0 * k)) * (qy - qw)
        # Chan parallel merge of (count, mean, M2)
        b_count = z.size
        b_mean = z.mean()
        b_m2 = ((z - b_mean) ** 2).sum()
        delta = b_mean - mean
        total = count + b_count
        mean += delta * b_count / total
        m2 += b_m2 + delta * delta * count * b_count / total
        count = total
    mc_var = m2 / (count - 1) if count > 1 else 0.0
    return InfoDensityStats(
        k=k,
        analytic_mean=analytic_mean,
        analytic_var=analytic_var,
        mc_mean=mean,
        mc_var=mc_var,
        samples=count,
        seed=seed,
    )


def info_density_trace_residual(cov: BlockNoiseCov, c_x: np.ndarray) -> float:
    """|Tr{-C_Y^{-1} C_X - C_Y^{-1} C_W + I}|, zero in exact arithmetic.

    The vanishing of this trace is what makes the mean of the information
    density equal the normalized mutual information.
    """
    c_x = np.asarray(c_x, dtype=float)
    c_y = cov.cov + c_x
    t1 = np.trace(np.linalg.solve(c_y, c_x))
    t2 = np.trace(np.linalg.solve(c_y, cov.cov))
    return abs(float(cov.k - t1 - t2))


def guard_delay(tau_opt: float, k: int, tau_m: int, ts: float, tpw: float) -> float:
    """Delay returning the sampling phase to ``tau_opt`` after k + tau_m samples.

    Satisfies (tau_opt + (k + tau_m)*ts + delay) mod tpw == tau_opt with
    delay in [0, tpw).
    """
    if not 0.0 <= tau_opt < tpw:
        raise ValueError(f"tau_opt must be in [0, tpw), got {tau_opt}")
    landing = math.fmod(tau_opt + (k + tau_m) * ts, tpw)
    if landing < tau_opt:
        return tau_opt - landing
    if landing > tau_opt:
        return tau_opt + tpw - landing
    return 0.0
