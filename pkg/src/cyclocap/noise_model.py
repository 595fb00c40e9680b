"""Pulse-shaped cyclostationary correlation model and its sampled lag values.

The continuous-time noise is a zero-mean Gaussian process whose variance
follows a periodic trapezoidal pulse and whose temporal correlation decays
exponentially up to a finite correlation length.  Sampling it at an interval
``T_s = T_pw / (p + eps)`` produces a discrete-time Gaussian process whose
correlation is periodic in the sample index when ``eps`` is rational and
almost-periodic otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np


class InvalidPulseShape(ValueError):
    """Pulse branches do not partition one period (tdc + 2*trf must be <= 1)."""


def pulse_value(t, tdc: float, trf: float):
    """Periodic trapezoidal pulse with unit period and range [0, 1].

    One period splits into four branches: a linear rise on ``[0, trf]``, a
    plateau at 1 on ``(trf, tdc + trf)``, a linear fall on
    ``[tdc + trf, tdc + 2*trf]`` and zero on the remainder.

    Parameters
    ----------
    t : float or ndarray
        Evaluation point(s); reduced modulo 1.
    tdc : float
        Duty cycle, the plateau fraction of the period.
    trf : float
        Rise/fall time as a fraction of the period, must be positive.

    Returns
    -------
    float or ndarray
        Pulse value(s) in [0, 1].
    """
    if trf <= 0.0 or tdc + 2.0 * trf > 1.0:
        raise InvalidPulseShape(
            f"pulse branches must fit in one period: tdc={tdc}, trf={trf}"
        )
    x = np.mod(np.asarray(t, dtype=float), 1.0)
    out = np.where(
        x <= trf,
        x / trf,
        np.where(
            x < tdc + trf,
            1.0,
            np.where(x <= tdc + 2.0 * trf, 1.0 - (x - tdc - trf) / trf, 0.0),
        ),
    )
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class PulseCorrelationModel:
    """Continuous-time correlation function of the interference process.

    The variance profile is ``c(t, 0) = base_var + amp * pulse((t/tpw) - phi)``
    and for nonnegative lags ``c(t, lam) = exp(-alpha*lam) * c(t, 0)`` up to
    the correlation length ``lambda_m``, zero beyond it.  Negative lags fold
    back through ``c(t, lam) = c(t + lam, -lam)``.

    All times are in seconds; ``tdc``, ``trf`` and ``phi`` are fractions of
    one period.
    """

    tpw: float
    tdc: float
    trf: float
    phi: float = 0.0
    base_var: float = 1.0
    amp: float = 4.0
    alpha: float = 1e6
    lambda_m: float = 4e-6

    def __post_init__(self):
        if self.tpw <= 0.0:
            raise ValueError(f"tpw must be positive, got {self.tpw}")
        if self.trf <= 0.0 or self.tdc + 2.0 * self.trf > 1.0:
            raise InvalidPulseShape(
                f"tdc + 2*trf must be <= 1: tdc={self.tdc}, trf={self.trf}"
            )
        if self.base_var <= 0.0:
            raise ValueError(f"base_var must be positive, got {self.base_var}")
        if self.amp < 0.0:
            raise ValueError(f"amp must be nonnegative, got {self.amp}")
        if self.lambda_m <= 0.0:
            raise ValueError(f"lambda_m must be positive, got {self.lambda_m}")
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")

    def variance(self, t):
        """Time-varying variance ``c(t, 0)``."""
        return self.base_var + self.amp * pulse_value(
            np.asarray(t, dtype=float) / self.tpw - self.phi, self.tdc, self.trf
        )


def ct_correlation(model: PulseCorrelationModel, t, lam):
    """Evaluate the continuous-time correlation ``c(t, lam)``.

    Vectorized over ``t`` and ``lam`` (broadcast together).
    """
    t = np.asarray(t, dtype=float)
    lam = np.asarray(lam, dtype=float)
    t, lam = np.broadcast_arrays(t, lam)
    # fold negative lags onto the earlier time instant
    tt = np.where(lam < 0.0, t + lam, t)
    ll = np.abs(lam)
    out = np.where(
        ll <= model.lambda_m,
        np.exp(-model.alpha * ll) * model.variance(tt),
        0.0,
    )
    return out if out.ndim else float(out)


def memory_length(model: PulseCorrelationModel, p: int) -> int:
    """Discrete-time correlation length ceil((p+1)*lambda_m / tpw) in samples.

    The sampled correlation vanishes beyond this many lags for every
    mismatch eps in [0, 1).  A small backoff guards against float fuzz
    bumping the ceiling across an exact integer.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    v = (p + 1) * model.lambda_m / model.tpw
    return max(1, math.ceil(v - 1e-9))


def rational_mismatch(eps, n: int) -> Fraction:
    """n-th rational approximation floor(n*eps)/n of the sampling mismatch.

    Exact ``Fraction`` inputs are floored in exact arithmetic, so the
    approximation recovers a rational eps = u/v exactly whenever v divides n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if isinstance(eps, Fraction):
        if not 0 <= eps < 1:
            raise ValueError(f"eps must be in [0, 1), got {eps}")
        return Fraction(math.floor(eps * n), n)
    if not 0.0 <= eps < 1.0:
        raise ValueError(f"eps must be in [0, 1), got {eps}")
    return Fraction(math.floor(n * eps), n)


@dataclass(frozen=True)
class SamplingSpec:
    """Sampling configuration: interval ``T_s = tpw / (p + eps)`` and phase.

    ``eps`` may be a float (asynchronous when irrational) or an exact
    ``Fraction`` u/v, in which case the sampled noise is cyclostationary
    with period ``p*v + u``.
    """

    p: int
    eps: float | Fraction
    tau0: float = 0.0

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if not 0 <= self.eps < 1:
            raise ValueError(f"eps must be in [0, 1), got {self.eps}")

    @property
    def is_rational(self) -> bool:
        return isinstance(self.eps, Fraction)

    @property
    def fundamental_period(self) -> int | None:
        """DT period p*v + u for exact rational eps = u/v, else None."""
        if not self.is_rational:
            return None
        return self.p * self.eps.denominator + self.eps.numerator

    def ts(self, tpw: float) -> float:
        return tpw / (self.p + float(self.eps))


@dataclass(frozen=True)
class DtCorrelation:
    """Sampled correlation ``c[i, delta] = c(i*Ts + tau0, delta*Ts)``.

    ``period`` is the DT period used downstream; it must be a multiple of
    the fundamental period and is None for asynchronous sampling.
    """

    model: PulseCorrelationModel
    spec: SamplingSpec
    tau_m: int = field(init=False)
    period: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "tau_m", memory_length(self.model, self.spec.p))
        fund = self.spec.fundamental_period
        if self.period is None:
            object.__setattr__(self, "period", fund)
        elif fund is None or self.period % fund != 0:
            raise ValueError(
                f"period {self.period} is not a multiple of the fundamental "
                f"DT period {fund} implied by eps={self.spec.eps}"
            )


def dt_correlation(
    model: PulseCorrelationModel,
    spec: SamplingSpec,
    period: int | None = None,
) -> DtCorrelation:
    """Bind a sampling configuration to a correlation model."""
    return DtCorrelation(model=model, spec=spec, period=period)


def sample_correlation(dt: DtCorrelation, i, delta, tau0=None):
    """Discrete-time correlation value(s) at sample index ``i`` and lag ``delta``.

    Vectorized: ``i``, ``delta`` and ``tau0`` broadcast together.  For
    synchronous sampling the index is reduced modulo the DT period first,
    which makes periodicity exact in floating point.  ``tau0`` overrides
    the sampling phase of the spec.
    """
    ts = dt.spec.ts(dt.model.tpw)
    t0 = dt.spec.tau0 if tau0 is None else np.asarray(tau0)
    i = np.asarray(i)
    delta = np.asarray(delta)
    if dt.period is not None:
        i = np.mod(i, dt.period)
    return ct_correlation(dt.model, i * ts + t0, delta * ts)
