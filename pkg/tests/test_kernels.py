import os
import subprocess
import sys

import numpy as np
import pytest

from eoent import _kernels_py, kernels
from eoent.errors import NumericalError
from eoent.oracles import random_model, random_stable_matrix

BACKENDS = kernels.backends()


def test_backend_is_known():
    assert kernels.BACKEND in ("cython", "python")
    assert "python" in BACKENDS


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("coeffs,expected", [
    ((-6.0, 11.0, -6.0), [1.0, 2.0, 3.0]),
    ((-2.0, 1.0, 0.0), [0.0, 1.0]),
    ((0.0, 0.0, -8.0), [2.0]),
    ((-3.0, 3.0, -1.0), [1.0]),
    ((0.0, 1.0, 0.0), [0.0]),
])
def test_cubic_roots(name, coeffs, expected):
    roots = BACKENDS[name].cubic_real_roots(*coeffs)
    assert len(roots) == len(expected)
    assert np.allclose(roots, expected, atol=1e-7)


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled extension not built")
def test_backends_agree(rng):
    cy, py = BACKENDS["cython"], BACKENDS["python"]
    for _ in range(200):
        m = random_model(rng)
        args = (m.g_norm, m.E_o_norm, m.E_m_norm, m.gamma_o, m.gamma_m, m.delta_o, m.delta_m)
        a, b = cy.steady_photon_numbers(*args), py.steady_photon_numbers(*args)
        assert len(a) == len(b)
        assert np.allclose(a, b, rtol=1e-12, atol=0)
        A = random_stable_matrix(rng)
        D = np.diag(rng.uniform(0, 2, 4))
        Va, Vb = cy.lyapunov_solve(A, D), py.lyapunov_solve(A, D)
        assert np.allclose(Va, Vb, rtol=1e-11, atol=1e-13)
        assert np.allclose(cy.covariance_invariants(Va), py.covariance_invariants(Va), rtol=1e-11)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_singular_lyapunov_raises(name):
    A = np.diag([-1.0, 1.0, -2.0, -3.0])  # eigenvalues 1 and -1 pair to zero
    with pytest.raises(NumericalError):
        BACKENDS[name].lyapunov_solve(A, np.eye(4))


def test_read_only_input_accepted():
    A = -np.eye(4)
    A.flags.writeable = False
    D = 2 * np.eye(4)
    D.flags.writeable = False
    assert np.allclose(kernels.lyapunov_solve(A, D), np.eye(4))


def test_pure_python_switch():
    env = dict(os.environ, EOENT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from eoent import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_fallback_module_is_complete():
    for name in ("cubic_real_roots", "steady_photon_numbers", "lyapunov_solve", "covariance_invariants"):
        assert callable(getattr(_kernels_py, name))
