"""Linearized fluctuation dynamics and the steady-state covariance matrix.

Quadrature ordering is ``(dX_o, dY_o, dX_m, dY_m)`` with
``X = (a + a^dag)/sqrt(2)``, ``Y = (a - a^dag)/(i sqrt(2))``; vacuum has
variance 1/2. Noise prefactors use the damping rates themselves
(``kappa == gamma``).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from eoent import kernels
from eoent.errors import StabilityError
from eoent.params import NormalizedModel

OMEGA_2MODE = np.array([
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0, 0.0],
])


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class LinearSystem:
    A: np.ndarray
    D: np.ndarray
    V: np.ndarray

    def __post_init__(self):
        for name in ("A", "D", "V"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))


def drift_matrix(m: NormalizedModel, alpha_o_abs: float, re_alpha_m: float) -> np.ndarray:
    g = m.g_norm
    detuning = m.delta_o - 2.0 * g * re_alpha_m
    G = 2.0 * g * alpha_o_abs
    return np.array([
        [-m.gamma_o, detuning, 0.0, 0.0],
        [-detuning, -m.gamma_o, G, 0.0],
        [0.0, 0.0, -m.gamma_m, m.delta_m],
        [G, 0.0, -m.delta_m, -m.gamma_m],
    ])


def build_drift(m: NormalizedModel, s) -> np.ndarray:
    """Drift matrix at operating point ``s`` (optical frame rotated so alpha_o > 0)."""
    return drift_matrix(m, abs(s.alpha_o), s.alpha_m.real)


def build_diffusion(m: NormalizedModel) -> np.ndarray:
    o = m.gamma_o * (2.0 * m.n_bar_o + 1.0)
    w = m.gamma_m * (2.0 * m.n_bar_m + 1.0)
    return np.diag([o, o, w, w])


def lyapunov_residual(A, V, D) -> float:
    A, V, D = (np.asarray(x, dtype=float) for x in (A, V, D))
    return float(np.linalg.norm(A @ V + V @ A.T + D))


def solve_lyapunov(A, D, require_stable: bool = True) -> np.ndarray:
    """Solve ``A V + V A^T + D = 0``.

    The ``n^2 x n^2`` vectorized system is solved directly and the result
    symmetrized. With ``require_stable`` (the default) an unstable ``A`` is
    rejected up front, since the solution is then not a covariance.
    """
    from eoent.steady_state import spectral_abscissa, STABILITY_MARGIN

    A = np.asarray(A, dtype=float)
    if require_stable:
        abscissa = spectral_abscissa(A)
        if not abscissa < -STABILITY_MARGIN:
            raise StabilityError(f"drift matrix is not stable (max Re lambda = {abscissa:.3e})")
    return kernels.lyapunov_solve(A, np.asarray(D, dtype=float))


def physicality_margin(V) -> float:
    """Smallest eigenvalue of ``V + (i/2) Omega``; physical iff >= 0."""
    V = np.asarray(V, dtype=float)
    n = V.shape[0] // 2
    omega = np.kron(np.eye(n), OMEGA_2MODE[:2, :2])
    return float(np.linalg.eigvalsh(V + 0.5j * omega).min())


def is_physical(V, tol: float = 1e-9) -> bool:
    return physicality_margin(V) >= -tol


def covariance_at(m: NormalizedModel, s) -> LinearSystem:
    if not s.stable:
        raise StabilityError(f"branch {s.branch_index} is unstable", branches=[s])
    A = build_drift(m, s)
    D = build_diffusion(m)
    return LinearSystem(A=A, D=D, V=solve_lyapunov(A, D))
