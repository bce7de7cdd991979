import numpy as np
import pytest

from eoent.params import NormalizedModel, PhysicalParams, normalize

REF30 = PhysicalParams(P_o=0.03, P_m=0.03, gamma_o=0.005, gamma_m=0.002, delta_o=0.002,
                      delta_m=0.055, T_env=0.015)


@pytest.fixture
def ref_params():
    return REF30


@pytest.fixture
def ref_model():
    return normalize(REF30)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def decoupled(**kw) -> NormalizedModel:
    base = dict(g_norm=0.0, E_o_norm=50.0, E_m_norm=80.0, gamma_o=0.01, gamma_m=0.003,
                delta_o=0.02, delta_m=0.05)
    base.update(kw)
    return NormalizedModel(**base)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
