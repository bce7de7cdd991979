"""Time-domain fluctuation propagation and the resonance-peak predictor.

Only the exact linear solution is implemented; the proportionality
solutions used in the qualitative resonance argument are not evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from eoent.errors import ParameterError
from eoent.params import NormalizedModel

MC_SEED = 20240611


def propagate(A, u0, t: float) -> np.ndarray:
    """Noise-free evolution ``exp(A t) u0``."""
    if t < 0:
        raise ParameterError("t", f"propagation time must be nonnegative, got {t!r}")
    A = np.asarray(A, dtype=float)
    return scipy.linalg.expm(A * t) @ np.asarray(u0, dtype=float)


@dataclass(frozen=True)
class ResonancePrediction:
    optical_peaks: tuple[float, float]
    microwave_peaks: tuple[float, float]
    optical_separation: float
    microwave_separation: float


def resonance_prediction(m: NormalizedModel, s) -> ResonancePrediction:
    """Peak locations of the optical and microwave resonant interaction.

    Optical peaks sit where ``delta_o - 2 g Re(alpha_m) = +-delta_m`` and
    microwave peaks where ``delta_m = +-(delta_o - 2 g Re(alpha_m))``.
    """
    shift = 2.0 * m.g_norm * s.alpha_m.real
    optical = (shift - m.delta_m, shift + m.delta_m)
    w = m.delta_o - shift
    microwave = (-w, w)
    return ResonancePrediction(
        optical_peaks=optical,
        microwave_peaks=microwave,
        optical_separation=optical[1] - optical[0],
        microwave_separation=microwave[1] - microwave[0],
    )


def sideband_scale_ratio(m: NormalizedModel, s) -> float:
    """``(2 delta_m / omega_do) / (2 |delta_o - 2 g Re alpha_m| / omega_dm)``.

    Small values mean the optical double peak is unresolvable compared with
    the microwave one.
    """
    w_do = m.omega_do / m.omega_m
    w_dm = m.omega_dm / m.omega_m
    w = abs(m.delta_o - 2.0 * m.g_norm * s.alpha_m.real)
    return (2.0 * abs(m.delta_m) / w_do) / (2.0 * w / w_dm)


def discretize(A, D, dt: float) -> tuple[np.ndarray, np.ndarray]:
    """Exact one-step propagator and noise covariance (Van Loan).

    Returns ``(Phi, Q)`` with ``Phi = exp(A dt)`` and
    ``Q = int_0^dt exp(A s) D exp(A^T s) ds``.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    block = np.zeros((2 * n, 2 * n))
    block[:n, :n] = A
    block[:n, n:] = D
    block[n:, n:] = -A.T
    E = scipy.linalg.expm(block * dt)
    phi = E[:n, :n]
    Q = E[:n, n:] @ phi.T
    return phi, 0.5 * (Q + Q.T)


def monte_carlo_covariance(A, D, t_final: float, n_steps: int, n_paths: int,
                           seed: int = MC_SEED) -> tuple[np.ndarray, np.ndarray]:
    """Sample covariance of an ensemble driven by discrete Gaussian noise.

    Every path starts at the origin. Returns ``(cov, stderr)``, where
    ``stderr`` is the Gaussian standard error of each second moment.
    """
    phi, Q = discretize(A, D, t_final / n_steps)
    n = phi.shape[0]
    L = np.linalg.cholesky(Q + 1e-300 * np.eye(n))
    rng = np.random.default_rng(seed)
    u = np.zeros((n_paths, n))
    for _ in range(n_steps):
        u = u @ phi.T + rng.standard_normal((n_paths, n)) @ L.T
    cov = u.T @ u / n_paths
    diag = np.diag(cov)
    stderr = np.sqrt((np.outer(diag, diag) + cov**2) / n_paths)
    return cov, stderr
