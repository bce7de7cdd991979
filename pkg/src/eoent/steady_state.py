"""Classical operating point and its stability.

Eliminating the microwave amplitude from the two fixed-point equations
leaves a real cubic in the intracavity photon number ``x = |alpha_o|^2``::

    x * (gamma_o^2 + (delta_o - theta(x))^2) = E_o^2
    theta(x) = 2 g (E_m gamma_m + g x delta_m) / (gamma_m^2 + delta_m^2)

Every nonnegative root is a branch. Branches are ordered by ``x`` and each is
classified by the drift spectrum; the four closed-form Routh-Hurwitz inequalities
are evaluated alongside for comparison.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from eoent import kernels
from eoent.errors import InternalError, NumericalError
from eoent.linear_model import drift_matrix
from eoent.params import NormalizedModel

STABILITY_MARGIN = 1e-12


@dataclass(frozen=True)
class SteadyState:
    alpha_o: complex
    alpha_m: complex
    x_photon: float
    branch_index: int
    stable: bool
    rh_flags: tuple[bool, bool, bool, bool]
    spectral_abscissa: float

    @property
    def alpha_o_abs(self) -> float:
        return abs(self.alpha_o)

    @property
    def re_alpha_m(self) -> float:
        return self.alpha_m.real


def amplitudes(m: NormalizedModel, x: float) -> tuple[complex, complex]:
    """Back-substitute a photon number into both complex amplitudes."""
    alpha_m = (m.E_m_norm + 1j * m.g_norm * x) / (m.gamma_m + 1j * m.delta_m)
    alpha_o = m.E_o_norm / (m.gamma_o + 1j * (m.delta_o - 2.0 * m.g_norm * alpha_m.real))
    return alpha_o, alpha_m


def residuals(m: NormalizedModel, alpha_o: complex, alpha_m: complex) -> tuple[complex, complex]:
    """Left-hand sides of the optical and microwave fixed-point equations."""
    g = m.g_norm
    r_o = (-1j * m.delta_o * alpha_o + 1j * g * (alpha_m + alpha_m.conjugate()) * alpha_o
           + m.E_o_norm - m.gamma_o * alpha_o)
    r_m = (-1j * m.delta_m * alpha_m + 1j * g * (alpha_o.conjugate() * alpha_o)
           + m.E_m_norm - m.gamma_m * alpha_m)
    return r_o, r_m


def spectral_abscissa(A) -> float:
    A = np.asarray(A, dtype=float)
    if not np.isfinite(A).all():
        raise NumericalError("drift matrix has non-finite entries", A)
    try:
        eig = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue iteration failed: {exc}", A) from exc
    return float(eig.real.max())


def spectral_stability(A) -> bool:
    """True iff every eigenvalue of ``A`` has real part below ``-1e-12``.

    Marginal spectra count as unstable.
    """
    return spectral_abscissa(A) < -STABILITY_MARGIN


def routh_hurwitz(m: NormalizedModel, s) -> tuple[bool, bool, bool, bool]:
    """The four closed-form stability inequalities, evaluated term by term as stated.

    ``alpha_m`` enters as ``Re(alpha_m)`` and ``alpha_o`` as ``|alpha_o|``.
    Some of the terms are dimensionally inhomogeneous, so these
    flags are diagnostic only; :func:`spectral_stability` is authoritative.
    """
    return _rh_inequalities(m, abs(s.alpha_o), s.alpha_m.real)


def _rh_inequalities(m, alpha_o, alpha_m):
    go, gm, dm, g = m.gamma_o, m.gamma_m, m.delta_m, m.g_norm
    u = 2 * g * alpha_m - m.delta_o
    G2 = 4 * g**2 * alpha_o**2
    c1 = go + gm
    c2 = (dm**2 + gm**2) * (u**2 + go**2) + G2 * dm * u
    c3 = (2 * u**4 * gm
          + u**2 * (2 * dm**2 * (go + gm) - dm**2 + 4 * go**2 * gm + 10 * go * gm**2 + 2 * gm**3 - gm**2)
          - G2 * dm * u
          + 2 * dm**4 * go
          + dm**2 * (2 * go**3 + 10 * go**2 * gm - go**2 + 4 * go * gm**2)
          + 2 * go**4 * gm + 10 * go**2 * gm**2 * (go + gm)
          - go**2 * gm**2 + 2 * go * gm**4)
    c4 = (u**4 * go * gm
          + 2 * u**2 * (-dm**2 * go * gm + go**3 * gm + 2 * go**2 * gm**2 + go * gm**3)
          - G2 * u * (dm * go**2 + 2 * go * gm + dm * gm**2)
          + dm**4 * go * gm
          + 2 * dm**2 * (go**3 * gm + 2 * go**2 * gm**2 + go * gm**3)
          + go**5 * gm + 2 * go**4 * gm**2 + 6 * go**3 * gm**3 + 4 * go**2 * gm**4 + go * gm**5)
    return (bool(c1 > 0), bool(c2 > 0), bool(c3 > 0), bool(c4 > 0))


def characteristic_coefficients(A) -> np.ndarray:
    """Coefficients ``[1, a1, ..., an]`` of ``det(sI - A)`` by Faddeev-LeVerrier.

    Uses matrix products and traces only, so it is independent of the
    eigenvalue route.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    coeffs = [1.0]
    M = np.zeros_like(A)
    eye = np.eye(n)
    for k in range(1, n + 1):
        M = A @ M + coeffs[-1] * eye
        coeffs.append(-np.trace(A @ M) / k)
    return np.array(coeffs)


def hurwitz_stability(A) -> bool:
    """Routh-Hurwitz test on the characteristic polynomial of a 4x4 drift."""
    _, a1, a2, a3, a4 = characteristic_coefficients(A)
    return bool(a1 > 0 and a2 > 0 and a3 > 0 and a4 > 0
                and a1 * a2 - a3 > 0
                and a1 * a2 * a3 - a3**2 - a1**2 * a4 > 0)


def solve_steady_states(m: NormalizedModel) -> list[SteadyState]:
    """All operating points, ascending in photon number."""
    xs = kernels.steady_photon_numbers(
        m.g_norm, m.E_o_norm, m.E_m_norm, m.gamma_o, m.gamma_m, m.delta_o, m.delta_m
    )
    if not xs:
        raise InternalError(f"no nonnegative real root of the steady-state cubic for {m!r}")
    states = []
    for index, x in enumerate(xs):
        alpha_o, alpha_m = amplitudes(m, x)
        A = drift_matrix(m, abs(alpha_o), alpha_m.real)
        abscissa = spectral_abscissa(A)
        states.append(SteadyState(
            alpha_o=complex(alpha_o),
            alpha_m=complex(alpha_m),
            x_photon=float(x),
            branch_index=index,
            stable=abscissa < -STABILITY_MARGIN,
            rh_flags=_rh_inequalities(m, abs(alpha_o), alpha_m.real),
            spectral_abscissa=abscissa,
        ))
    return states


def default_branch(states) -> SteadyState | None:
    """Lowest-photon-number stable branch, or None when all are unstable."""
    for s in states:
        if s.stable:
            return s
    return None
