"""Block decomposition of the sampled noise and its matrix spectral density.

Stacking ``pn`` consecutive samples of a discrete-time cyclostationary
process with period ``pn`` yields a stationary ``pn``-variate process.  Its
block correlation sequence has finite lag support and its discrete-time
Fourier transform is a Hermitian positive-definite matrix at every
frequency; the eigenvalues of that matrix drive the waterfilling solution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .noise_model import DtCorrelation, sample_correlation


class ModelInvalidError(RuntimeError):
    """Matrix spectral density failed strict positivity."""


@dataclass(frozen=True)
class BlockCorrelation:
    """Block correlation matrices C[tau] of the stacked noise process.

    ``mats[tau]`` holds C[tau] for tau = 0..L; negative lags follow from
    C[-tau] = C[tau]^T.  ``ts`` is the sampling interval in seconds, kept
    for rate conversion.
    """

    pn: int
    L: int
    mats: np.ndarray  # shape (L+1, pn, pn)
    tau0: float
    ts: float

    def lag(self, tau: int) -> np.ndarray:
        """C[tau] for any tau; zero outside [-L, L]."""
        if abs(tau) > self.L:
            return np.zeros((self.pn, self.pn))
        return self.mats[tau] if tau >= 0 else self.mats[-tau].T


def build_block_correlation(dt: DtCorrelation, pn: int) -> BlockCorrelation:
    """Assemble C[tau] for |tau| <= L = ceil(tau_m / pn).

    Entry (a, b) of C[tau] is the sampled correlation at index b and lag
    ``tau*pn + a - b``.  When ``pn`` exceeds the memory ``tau_m`` only the
    adjacent block lag survives (L = 1); smaller periods need more lags.
    """
    if pn < 1:
        raise ValueError(f"pn must be >= 1, got {pn}")
    if dt.period is None or pn % dt.period != 0:
        raise ValueError(
            f"block size {pn} is not a DT period of the sampled noise "
            f"(fundamental period: {dt.period})"
        )
    L = -(-dt.tau_m // pn)
    a = np.arange(pn)[:, None]
    b = np.arange(pn)[None, :]
    mats = np.empty((L + 1, pn, pn))
    for tau in range(L + 1):
        mats[tau] = sample_correlation(dt, b, tau * pn + a - b)
    return BlockCorrelation(
        pn=pn, L=L, mats=mats, tau0=dt.spec.tau0, ts=dt.spec.ts(dt.model.tpw)
    )


def spectral_matrix(bc: BlockCorrelation, theta: float) -> np.ndarray:
    """Matrix spectral density C'(theta) = sum_tau C[tau] e^{-j*theta*tau}.

    Hermitian for every theta because C[-tau] = C[tau]^T.
    """
    out = bc.mats[0].astype(complex)
    for tau in range(1, bc.L + 1):
        phase = np.exp(-1j * theta * tau)
        out += bc.mats[tau] * phase + bc.mats[tau].T * np.conj(phase)
    return out


def hermitian_eigenvalues(mat: np.ndarray, rtol: float = 1e-12) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending.

    Rejects inputs whose Hermitian residual exceeds ``rtol`` times the
    largest entry magnitude.
    """
    mat = np.asarray(mat)
    scale = np.abs(mat).max()
    resid = np.abs(mat - mat.conj().T).max()
    if scale > 0 and resid > rtol * scale:
        raise ValueError(f"matrix is not Hermitian: residual {resid:.3e} > {rtol:.0e}*{scale:.3e}")
    return np.linalg.eigvalsh(mat)[::-1]


@dataclass(frozen=True)
class SpectralEigs:
    """Eigenvalues of C'(theta) on a frequency grid over [0, pi].

    ``eigs[j]`` holds the descending eigenvalues at ``theta[j]``.  The grid
    covers half the spectral circle; eigenvalues at -theta coincide with
    those at theta, so integrals pick up a factor of two.
    """

    theta: np.ndarray  # shape (n_theta,)
    eigs: np.ndarray   # shape (n_theta, pn), descending rows
    pn: int
    loaded: bool = False  # diagonal loading was applied

    @property
    def weights(self) -> np.ndarray:
        """Trapezoidal quadrature weights for the theta grid (sum = pi)."""
        n = self.theta.size
        w = np.full(n, np.pi / (n - 1))
        w[0] *= 0.5
        w[-1] *= 0.5
        return w


# chunk the theta axis so batched eigensolves stay within ~200 MB
_CHUNK_BYTES = 2e8


def spectral_eigenvalues(
    bc: BlockCorrelation,
    n_theta: int = 1024,
    diag_load: bool = False,
) -> SpectralEigs:
    """Eigenvalues of the spectral density on a uniform grid over [0, pi].

    Raises ModelInvalidError if any eigenvalue is nonpositive.  With
    ``diag_load`` a floor of 1e-12 times the largest noise variance is first
    added to the diagonal and the result is flagged; the floor rescues
    round-off-level violations only, a genuinely indefinite model still
    raises.
    """
    if n_theta < 2:
        raise ValueError(f"n_theta must be >= 2, got {n_theta}")
    pn = bc.pn
    theta = np.linspace(0.0, np.pi, n_theta)
    eigs = np.empty((n_theta, pn))
    base = bc.mats[0].astype(complex)
    if diag_load:
        base = base + 1e-12 * np.max(np.diag(bc.mats[0])) * np.eye(pn)
    chunk = max(1, int(_CHUNK_BYTES / (16 * pn * pn)))
    for start in range(0, n_theta, chunk):
        th = theta[start:start + chunk]
        stack = np.broadcast_to(base, (th.size, pn, pn)).copy()
        for tau in range(1, bc.L + 1):
            phase = np.exp(-1j * th * tau)[:, None, None]
            stack += bc.mats[tau] * phase + bc.mats[tau].T * np.conj(phase)
        eigs[start:start + chunk] = np.linalg.eigvalsh(stack)[:, ::-1]
    if eigs.min() <= 0.0:
        loaded_note = " (after diagonal loading)" if diag_load else ""
        raise ModelInvalidError(
            f"spectral density is not strictly positive definite{loaded_note} "
            f"(min eigenvalue {eigs.min():.3e}); the correlation model is invalid"
        )
    return SpectralEigs(theta=theta, eigs=eigs, pn=pn, loaded=diag_load)
