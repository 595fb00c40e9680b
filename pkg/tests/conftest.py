"""Shared model builders and an independent scalar correlation oracle."""

import math

import numpy as np

import cyclocap as cc


def low_rate_model(tdc=0.45, phi=0.0, **kw):
    """Slow-decay configuration (interference decays over ~2 samples)."""
    return cc.PulseCorrelationModel(
        tpw=5e-6, tdc=tdc, trf=0.01, phi=phi, alpha=1e6, lambda_m=4e-6, **kw
    )


def high_rate_model(tdc=0.45, phi=0.0, **kw):
    """Fast-decay configuration used for the sampling-rate sweeps."""
    return cc.PulseCorrelationModel(
        tpw=5e-6, tdc=tdc, trf=0.01, phi=phi, alpha=1e7, lambda_m=4e-6, **kw
    )


def white_model(var=1.0):
    """Effectively memoryless noise: flat variance, decay underflows to zero."""
    return cc.PulseCorrelationModel(
        tpw=5e-6, tdc=0.5, trf=0.01, base_var=var, amp=0.0, alpha=1e9, lambda_m=1e-9
    )


def boxcar_model():
    """Nearly flat correlation out to the correlation length.

    The sharp cutoff makes the sampled spectrum indefinite, which exercises
    the positivity guards.
    """
    return cc.PulseCorrelationModel(
        tpw=5e-6, tdc=0.5, trf=0.01, base_var=1.0, amp=0.0, alpha=1e3, lambda_m=4e-6
    )


def oracle_ct_correlation(model, t, lam):
    """Scalar reference evaluation of the correlation, spelled out branch by branch.

    Kept independent of the package vectorization so matrix builders can be
    checked against a second implementation path.
    """
    if lam < 0.0:
        t, lam = t + lam, -lam
    if lam > model.lambda_m:
        return 0.0
    frac = (t / model.tpw - model.phi) % 1.0
    if frac <= model.trf:
        pul = frac / model.trf
    elif frac < model.tdc + model.trf:
        pul = 1.0
    elif frac <= model.tdc + 2.0 * model.trf:
        pul = 1.0 - (frac - model.tdc - model.trf) / model.trf
    else:
        pul = 0.0
    return math.exp(-model.alpha * lam) * (model.base_var + model.amp * pul)


def oracle_block_mats(model, p, eps_frac, pn, tau0=0.0):
    """Brute-force block correlation matrices, index by index."""
    ts = model.tpw / (p + eps_frac.numerator / eps_frac.denominator)
    tau_m = math.ceil((p + 1) * model.lambda_m / model.tpw - 1e-9)
    big_l = math.ceil(tau_m / pn)
    mats = {}
    for tau in range(-big_l, big_l + 1):
        mat = np.empty((pn, pn))
        for a in range(pn):
            for b in range(pn):
                mat[a, b] = oracle_ct_correlation(
                    model, b * ts + tau0, (tau * pn + a - b) * ts
                )
        mats[tau] = mat
    return mats, big_l
