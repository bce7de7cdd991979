"""Pure-Python/NumPy kernels.

Reference implementation of the hot per-point kernels. ``eoent._kernels`` is
the compiled twin with the same signatures; :mod:`eoent.kernels` picks one at
import time.
"""
from __future__ import annotations

import math
import warnings

import numpy as np
import scipy.linalg

from eoent.errors import NumericalError

PIVOT_RTOL = 1e-13
# near-zero discriminant is treated as a repeated root
DISC_RTOL = 1e-12
MERGE_RTOL = 1e-9
_NEWTON_MAX = 8


def _polish(y, b, c, d):
    f = ((y + b) * y + c) * y + d
    for _ in range(_NEWTON_MAX):
        fp = (3.0 * y + 2.0 * b) * y + c
        if fp == 0.0:
            break
        step = f / fp
        y_new = y - step
        f_new = ((y_new + b) * y_new + c) * y_new + d
        if abs(f_new) > abs(f):
            break
        y, f = y_new, f_new
        if abs(step) <= 1e-16 * abs(y) or f == 0.0:
            break
    return y


def cubic_real_roots(b: float, c: float, d: float) -> list[float]:
    """Real roots of ``y^3 + b y^2 + c y + d``, ascending.

    Closed form (trigonometric for three real roots, Cardano otherwise),
    then Newton polish on the undepressed polynomial. Coincident roots are
    reported once.
    """
    shift = b / 3.0
    p = c - b * shift
    q = (2.0 * b * b * b) / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if p == 0.0 and q == 0.0:
        ts = [0.0]
    elif p < 0.0 and disc <= DISC_RTOL * max((q / 2.0) ** 2, (-p / 3.0) ** 3):
        r = math.sqrt(-p / 3.0)
        arg = max(-1.0, min(1.0, -q / (2.0 * r**3)))
        phi = math.acos(arg)
        ts = [2.0 * r * math.cos((phi - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        s = math.sqrt(max(disc, 0.0))
        big = -math.copysign(1.0, q) * float(np.cbrt(abs(q) / 2.0 + s))
        ts = [big - p / (3.0 * big)] if big != 0.0 else [0.0]
    roots = sorted(_polish(t - shift, b, c, d) for t in ts)
    out = []
    for y in roots:
        if out and abs(y - out[-1]) <= MERGE_RTOL * max(abs(y), abs(out[-1]), 1e-300):
            continue
        out.append(y)
    return out


def steady_photon_numbers(g, e_o, e_m, gamma_o, gamma_m, delta_o, delta_m) -> list[float]:
    """All nonnegative intracavity photon numbers ``x = |alpha_o|^2``.

    Works with ``y = b x`` so the cubic coefficients are all of the order of
    the detunings, whatever the photon number.
    """
    if e_o == 0.0:
        return [0.0]
    k = 2.0 * g / (gamma_m * gamma_m + delta_m * delta_m)
    a = delta_o - k * e_m * gamma_m
    slope = k * g * delta_m
    if slope == 0.0:
        return [e_o * e_o / (gamma_o * gamma_o + a * a)]
    ys = cubic_real_roots(-2.0 * a, gamma_o * gamma_o + a * a, -slope * e_o * e_o)
    xs = [y / slope for y in ys]
    return sorted(x for x in xs if x >= 0.0)


def lyapunov_solve(A, D) -> np.ndarray:
    """Solve ``A V + V A^T = -D`` by vectorization, then symmetrize."""
    A = np.asarray(A, dtype=float)
    D = np.asarray(D, dtype=float)
    n = A.shape[0]
    eye = np.eye(n)
    M = np.kron(A, eye) + np.kron(eye, A)
    with warnings.catch_warnings():
        # singularity is reported through the pivot check below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(M, check_finite=False)
    pivots = np.abs(np.diag(lu))
    scale = np.abs(M).max()
    if not np.isfinite(pivots).all() or pivots.min() <= PIVOT_RTOL * scale:
        raise NumericalError("Lyapunov system is singular (marginal spectrum)", A)
    v = scipy.linalg.lu_solve((lu, piv), -D.reshape(-1), check_finite=False)
    V = v.reshape(n, n)
    return 0.5 * (V + V.T)


def covariance_invariants(V) -> tuple[float, float, float, float, float]:
    """``(Sigma, det V, det V11, det V22, det V12)`` of a two-mode covariance."""
    V = np.asarray(V, dtype=float)
    d11 = np.linalg.det(V[:2, :2])
    d22 = np.linalg.det(V[2:, 2:])
    d12 = np.linalg.det(V[:2, 2:])
    return d11 + d22 - 2.0 * d12, np.linalg.det(V), d11, d22, d12
