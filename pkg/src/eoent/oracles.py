"""Independent reference computations used by the self-test and test suite.

Each oracle reaches its answer by a route that shares no code with the
production path: brute-force sign scanning for the steady state, direct
quadrature of the covariance integral, analytic two-mode squeezed states.
"""
from __future__ import annotations

import math

import numpy as np
import scipy.integrate
import scipy.linalg

from eoent.params import NormalizedModel


def steady_state_function(m: NormalizedModel, x):
    """``x (gamma_o^2 + (delta_o - theta(x))^2) - E_o^2`` evaluated directly."""
    x = np.asarray(x, dtype=float)
    k = 2 * m.g_norm / (m.gamma_m**2 + m.delta_m**2)
    u = (m.delta_o - k * m.E_m_norm * m.gamma_m) - (k * m.g_norm * m.delta_m) * x
    u *= u
    u += m.gamma_o**2
    u *= x
    u -= m.E_o_norm**2
    return u


def dense_scan_roots(m: NormalizedModel, n_linear: int = 10**6, n_geometric: int = 2 * 10**5,
                     bisections: int = 80) -> list[float]:
    """Roots located from sign changes on a dense grid, refined by bisection.

    The grid covers ``[0, 10 E_o^2 / gamma_o^2]`` linearly; the first linear
    cell is filled in geometrically so that roots much smaller than the
    linear spacing are still bracketed tightly.
    """
    if m.E_o_norm == 0:
        return [0.0]
    top = 10.0 * m.E_o_norm**2 / m.gamma_o**2
    linear = np.linspace(0.0, top, n_linear)
    grid = np.concatenate([[0.0], np.geomspace(top * 1e-15, linear[1], n_geometric)[:-1], linear[1:]])
    f = steady_state_function(m, grid)
    roots = list(grid[f == 0.0])
    positive = f > 0
    idx = np.nonzero((positive[:-1] != positive[1:]) & (f[:-1] != 0) & (f[1:] != 0))[0]
    lo, hi = grid[idx].copy(), grid[idx + 1].copy()
    flo = f[idx]
    for _ in range(bisections):
        mid = 0.5 * (lo + hi)
        fm = steady_state_function(m, mid)
        left = np.sign(fm) == np.sign(flo)
        lo = np.where(left, mid, lo)
        flo = np.where(left, fm, flo)
        hi = np.where(left, hi, mid)
    roots.extend(0.5 * (lo + hi))
    return sorted(float(r) for r in roots)


def lyapunov_integral(A, D, tail: float = 1e-12, epsrel: float = 1e-11) -> np.ndarray:
    """``int_0^inf exp(A s) D exp(A^T s) ds`` by adaptive quadrature.

    The upper limit is the first ``T`` with ``||exp(A T)|| < tail``.
    """
    A = np.asarray(A, dtype=float)
    D = np.asarray(D, dtype=float)
    abscissa = np.linalg.eigvals(A).real.max()
    if abscissa >= 0:
        raise ValueError("integral diverges for an unstable drift matrix")
    T = -math.log(tail) / -abscissa
    while np.linalg.norm(scipy.linalg.expm(A * T), 2) >= tail:
        T *= 1.5

    def integrand(s):
        M = scipy.linalg.expm(A * s)
        return (M @ D @ M.T).ravel()

    # split at a few decay times so the adaptive rule sees the structure
    edges = np.unique(np.concatenate([[0.0], np.geomspace(T * 1e-4, T, 12)]))
    total = np.zeros(A.size)
    for a, b in zip(edges[:-1], edges[1:]):
        part, _ = scipy.integrate.quad_vec(integrand, a, b, epsrel=epsrel, epsabs=0.0)
        total += part
    return total.reshape(A.shape)


def tmsv_covariance(r: float) -> np.ndarray:
    """Two-mode squeezed vacuum covariance (vacuum variance 1/2)."""
    c, s = math.cosh(2 * r) / 2, math.sinh(2 * r) / 2
    V = np.zeros((4, 4))
    V[:2, :2] = V[2:, 2:] = c * np.eye(2)
    V[:2, 2:] = V[2:, :2] = s * np.diag([1.0, -1.0])
    return V


def random_stable_matrix(rng: np.random.Generator, n: int = 4) -> np.ndarray:
    """Random dense matrix shifted so its spectral abscissa is in [-1, -0.1]."""
    M = rng.standard_normal((n, n))
    abscissa = np.linalg.eigvals(M).real.max()
    return M - (abscissa + rng.uniform(0.1, 1.0)) * np.eye(n)


def random_model(rng: np.random.Generator) -> NormalizedModel:
    """A random normalized model spanning weak to strongly nonlinear regimes."""
    return NormalizedModel(
        g_norm=10 ** rng.uniform(-8, -5),
        E_o_norm=10 ** rng.uniform(0, 4),
        E_m_norm=10 ** rng.uniform(2, 5),
        gamma_o=10 ** rng.uniform(-3, -1),
        gamma_m=10 ** rng.uniform(-3.5, -1.5),
        delta_o=rng.uniform(-0.2, 0.2),
        delta_m=rng.uniform(-0.2, 0.2),
        n_bar_m=10 ** rng.uniform(-3, 2),
    )
