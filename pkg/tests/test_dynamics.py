import numpy as np
import pytest

from eoent.dynamics import (discretize, monte_carlo_covariance, propagate, resonance_prediction,
                            sideband_scale_ratio)
from eoent.entanglement import entanglement_of
from eoent.errors import ParameterError
from eoent.linear_model import solve_lyapunov
from eoent.oracles import lyapunov_integral, random_stable_matrix
from eoent.params import normalize
from eoent.presets import PRESETS
from eoent.steady_state import solve_steady_states
from conftest import decoupled


def test_propagate_identity_and_decay(rng):
    A = random_stable_matrix(rng)
    u0 = rng.standard_normal(4)
    assert np.array_equal(propagate(A, u0, 0.0), u0)
    assert np.allclose(propagate(-0.3 * np.eye(4), u0, 2.0), np.exp(-0.6) * u0, rtol=1e-14)
    with pytest.raises(ParameterError):
        propagate(A, u0, -1.0)


def test_propagate_spectral_decay(rng):
    for _ in range(20):
        A = random_stable_matrix(rng)
        u0 = rng.standard_normal(4)
        t = 50 / abs(np.linalg.eigvals(A).real.max())
        assert np.linalg.norm(propagate(A, u0, t)) <= 1e-10 * np.linalg.norm(u0)


def test_propagate_semigroup(rng):
    A = random_stable_matrix(rng)
    u0 = rng.standard_normal(4)
    two_step = propagate(A, propagate(A, u0, 0.7), 1.9)
    assert np.allclose(two_step, propagate(A, u0, 2.6), rtol=1e-9, atol=0)


def test_resonance_decoupled():
    m = decoupled()
    (s,) = solve_steady_states(m)
    res = resonance_prediction(m, s)
    assert res.optical_peaks == (-m.delta_m, m.delta_m)
    assert res.microwave_peaks == (-m.delta_o, m.delta_o)
    assert res.optical_separation == pytest.approx(2 * m.delta_m)


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_optical_double_peak_unresolvable(name):
    spec = PRESETS[name]
    for oid in range(len(spec.curves())):
        for v in spec.grid()[::50]:
            m = normalize(spec.params_at(oid, v))
            try:
                s = entanglement_of(m).state
            except Exception:
                continue
            # at least an order of magnitude everywhere on the preset grids
            assert sideband_scale_ratio(m, s) < 0.15


def test_discretization_noise_matches_integral(rng):
    A = random_stable_matrix(rng)
    D = np.diag(rng.uniform(0.2, 1, 4))
    V = lyapunov_integral(A, D)
    for dt in (0.01, 0.5, 3.0):
        phi, Q = discretize(A, D, dt)
        assert np.allclose(phi, propagate(A, np.eye(4), dt), rtol=1e-12)
        # stationarity: V = phi V phi^T + Q
        assert np.allclose(Q, V - phi @ V @ phi.T, rtol=1e-7, atol=1e-10)


def test_monte_carlo_covariance(rng):
    A = random_stable_matrix(rng)
    D = np.diag(rng.uniform(0.2, 1, 4))
    V = solve_lyapunov(A, D)
    t_final = 40 / abs(np.linalg.eigvals(A).real.max())
    cov, err = monte_carlo_covariance(A, D, t_final, n_steps=200, n_paths=20000)
    z = np.abs(cov - V) / err
    # 16 correlated entries, 3 sigma gate on each
    assert z.max() < 3.0 + 1.0
    assert np.median(z) < 3.0
