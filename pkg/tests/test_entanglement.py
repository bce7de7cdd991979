import math

import numpy as np
import pytest

from eoent.errors import AllUnstableError, StabilityError, UnphysicalCovarianceError
from eoent.entanglement import entanglement_of, log_negativity
from eoent.oracles import random_model, tmsv_covariance
from eoent.params import normalize
from eoent.presets import preset
from conftest import REF30, decoupled


def _rot(phi):
    return np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])


def test_vacuum():
    res = log_negativity(np.eye(4) / 2)
    assert res.eta_minus == 0.5
    assert res.E_N == 0.0


@pytest.mark.parametrize("r", [0.1, 0.5, 1.0, 2.0])
def test_two_mode_squeezed(r):
    res = log_negativity(tmsv_covariance(r))
    assert res.E_N == pytest.approx(2 * r, abs=1e-9)
    assert res.eta_minus == pytest.approx(math.exp(-2 * r) / 2, rel=1e-8)
    assert res.E_N_log2 == pytest.approx(2 * r / math.log(2), abs=1e-9)


def test_thermal_product_state():
    assert log_negativity(np.diag([0.5, 0.5, 3.0, 3.0])).E_N == 0.0
    assert log_negativity(np.diag([2.0, 2.0, 0.5, 0.5])).E_N == 0.0


def test_local_rotation_invariance(rng):
    V = tmsv_covariance(0.7)
    V = V + np.diag([0.1, 0.2, 0.05, 0.3])
    base = log_negativity(V).E_N
    assert base > 0
    for _ in range(50):
        S = np.zeros((4, 4))
        S[:2, :2] = _rot(rng.uniform(0, 2 * math.pi))
        S[2:, 2:] = _rot(rng.uniform(0, 2 * math.pi))
        assert log_negativity(S @ V @ S.T).E_N == pytest.approx(base, abs=1e-9)


def test_unphysical_rejected():
    # Sigma = -1, det V = 25: Sigma^2 - 4 det V < 0
    V = np.block([[np.eye(2), 3 * np.eye(2)], [3 * np.eye(2), 4 * np.eye(2)]])
    with pytest.raises(UnphysicalCovarianceError):
        log_negativity(V)


def test_decoupled_not_entangled():
    assert entanglement_of(decoupled()).E_N == 0.0
    assert entanglement_of(decoupled(n_bar_m=2.0)).E_N == 0.0


def test_temperature_ladder_preset_2a():
    spec = preset("2a")
    for oid in range(len(spec.curves())):
        values = [entanglement_of(normalize(spec.params_at(oid, T))).E_N
                  for T in (0.015, 1, 5, 10, 15, 20, 30)]
        assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))
        assert values[0] > 0


def test_zero_microwave_detuning_preset_6():
    spec = preset("6")
    for oid in range(len(spec.curves())):
        assert entanglement_of(normalize(spec.params_at(oid, 0.0))).E_N <= 1e-3


def test_entangled_near_optical_resonance():
    best = max((entanglement_of(normalize(REF30.replace(delta_o=d))).E_N, d)
               for d in np.linspace(-0.2, 0.2, 81))
    assert best[0] > 0
    assert abs(best[1]) < 0.06


def test_branch_selection_errors(rng):
    with pytest.raises(StabilityError):
        entanglement_of(decoupled(), branch=3)
    for _ in range(3000):
        m = random_model(rng)
        try:
            entanglement_of(m)
        except AllUnstableError as exc:
            assert exc.exit_code == 4
            assert exc.branches and not any(s.stable for s in exc.branches)
            return
    pytest.fail("no all-unstable model drawn")
