"""Logarithmic negativity of the optical-microwave steady state."""
from __future__ import annotations

import math
from dataclasses import dataclass

from eoent import kernels
from eoent.errors import AllUnstableError, StabilityError, UnphysicalCovarianceError
from eoent.linear_model import LinearSystem, covariance_at
from eoent.params import NormalizedModel
from eoent.steady_state import SteadyState, default_branch, solve_steady_states

UNPHYSICAL_TOL = 1e-9


@dataclass(frozen=True)
class EntanglementResult:
    eta_minus: float
    E_N: float
    sigma_V: float
    det_V: float
    det_V11: float
    det_V22: float
    det_V12: float

    @property
    def E_N_log2(self) -> float:
        return self.E_N / math.log(2.0)


def log_negativity(V) -> EntanglementResult:
    """Logarithmic negativity ``max(0, -ln 2 eta_minus)`` of a 4x4 covariance.

    ``eta_minus`` is the smallest symplectic eigenvalue of the partial
    transpose, ``2^{-1/2} [Sigma - (Sigma^2 - 4 det V)^{1/2}]^{1/2}`` with
    ``Sigma = det V11 + det V22 - 2 det V12``.
    """
    sigma, det_v, d11, d22, d12 = kernels.covariance_invariants(V)
    disc = sigma * sigma - 4.0 * det_v
    if disc < -UNPHYSICAL_TOL:
        raise UnphysicalCovarianceError(f"Sigma^2 - 4 det V = {disc:.3e} < 0", V)
    inner = sigma - math.sqrt(max(disc, 0.0))
    if not inner > 0.0:
        raise UnphysicalCovarianceError(f"partially transposed spectrum is not positive ({inner:.3e})", V)
    eta = math.sqrt(inner / 2.0)
    return EntanglementResult(
        eta_minus=eta,
        E_N=max(0.0, -math.log(2.0 * eta)),
        sigma_V=float(sigma),
        det_V=float(det_v),
        det_V11=float(d11),
        det_V22=float(d22),
        det_V12=float(d12),
    )


@dataclass(frozen=True)
class Evaluation:
    """Full pipeline output for one parameter point."""

    model: NormalizedModel
    branches: tuple[SteadyState, ...]
    state: SteadyState
    system: LinearSystem
    result: EntanglementResult

    @property
    def E_N(self) -> float:
        return self.result.E_N


def entanglement_of(m: NormalizedModel, branch: int | None = None) -> Evaluation:
    """Steady state, covariance and negativity in one call.

    ``branch=None`` picks the lowest-photon-number stable branch. Raises
    :class:`AllUnstableError` when no branch is stable and
    :class:`StabilityError` if an explicitly requested branch is unstable.
    """
    branches = tuple(solve_steady_states(m))
    if branch is None:
        state = default_branch(branches)
        if state is None:
            detail = ", ".join(f"#{s.branch_index}: x={s.x_photon:.4g}, max Re={s.spectral_abscissa:.3g}"
                               for s in branches)
            raise AllUnstableError(f"no stable steady state ({detail})", branches=branches)
    else:
        if not 0 <= branch < len(branches):
            raise StabilityError(f"branch {branch} does not exist ({len(branches)} found)", branches)
        state = branches[branch]
    system = covariance_at(m, state)
    return Evaluation(m, branches, state, system, log_negativity(system.V))
