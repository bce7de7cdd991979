import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eoent.errors import ParameterError
from eoent.params import (HBAR, K_B, NormalizedModel, PhysicalParams, coupling_g, denormalize,
                          drive_strengths, from_absolute, normalize, thermal_occupation)

# Independent hand evaluation of the coupling and drive formulas.
C = 299792458.0


def _g_by_hand(lam=1064e-9, f=9e9, n=2.232, r=32e-12, l=2e-3, L=2.1e-3, d=50e-6, cap=1e-12,
               d_o=0.002, d_m=0.0):
    wm = 2 * math.pi * f
    tau = 2 * (n * l + (L - l)) / C
    w_do = 2 * math.pi * C / lam - d_o * wm
    w_dm = wm * (1 - d_m)
    return w_do * n**3 * r * l / (C * tau * d) * math.sqrt(HBAR * w_dm / (2 * cap))


def test_coupling_matches_hand_evaluation():
    g = coupling_g(PhysicalParams(delta_m=0.0))
    assert g == pytest.approx(_g_by_hand(), rel=1e-12)
    assert g == pytest.approx(4.8e3, rel=0.01)


def test_coupling_with_microwave_detuning():
    g = coupling_g(PhysicalParams())
    assert g == pytest.approx(_g_by_hand(d_m=0.055), rel=1e-12)


def test_coupling_zero_and_scalings():
    p = PhysicalParams()
    g = coupling_g(p)
    assert coupling_g(p.replace(r_eo=0.0)) == 0.0
    assert coupling_g(p.replace(d_gap=2 * p.d_gap)) == pytest.approx(g / 2, rel=1e-15)
    assert coupling_g(p.replace(r_eo=3 * p.r_eo)) == pytest.approx(3 * g, rel=1e-15)


def test_coupling_inverse_in_round_trip():
    # n = 1 makes tau = 2L/c, independent of l
    p = PhysicalParams(n_refr=1.0)
    g1 = coupling_g(p)
    g2 = coupling_g(p.replace(L_cavity=2 * p.L_cavity))
    assert g2 == pytest.approx(g1 / 2, rel=1e-14)
    assert coupling_g(p.replace(l_crystal=p.l_crystal / 2)) == pytest.approx(g1 / 2, rel=1e-14)


def test_drive_strength_value():
    e_o, e_m = drive_strengths(PhysicalParams(P_o=0.03, gamma_o=0.005, delta_o=0.0))
    wm = 2 * math.pi * 9e9
    w_o = 2 * math.pi * C / 1064e-9
    assert e_o == pytest.approx(math.sqrt(2 * 0.03 * 0.005 * wm / (HBAR * w_o)), rel=1e-12)
    assert e_o == pytest.approx(9.5e12, rel=0.01)


def test_drive_strength_scalings():
    p = PhysicalParams()
    e_o, e_m = drive_strengths(p)
    assert drive_strengths(p.replace(P_o=0.0))[0] == 0.0
    assert drive_strengths(p.replace(P_m=4 * p.P_m))[1] == pytest.approx(2 * e_m, rel=1e-15)
    assert drive_strengths(p.replace(P_o=2 * p.P_o, gamma_o=8 * p.gamma_o))[0] == pytest.approx(4 * e_o, rel=1e-14)


def test_thermal_occupation_values():
    w = 2 * math.pi * 9e9
    assert thermal_occupation(w, HBAR * w / K_B) == pytest.approx(1 / (math.e - 1), rel=1e-14)
    assert thermal_occupation(w, HBAR * w / K_B) == pytest.approx(0.5820, abs=5e-5)
    assert thermal_occupation(w, HBAR * w / (K_B * math.log(2))) == pytest.approx(1.0, rel=1e-14)
    assert thermal_occupation(w, 0.0) == 0.0
    assert thermal_occupation(1e15, 0.001) == 0.0


@settings(max_examples=200, deadline=None)
@given(st.floats(1e8, 1e14), st.floats(1e-3, 1e3), st.floats(1.01, 3.0))
def test_thermal_occupation_monotone(w, T, k):
    n = thermal_occupation(w, T)
    if n > 1e-300:
        assert thermal_occupation(k * w, T) < n
        assert thermal_occupation(w, k * T) > n


def test_thermal_occupation_domain():
    with pytest.raises(ParameterError):
        thermal_occupation(0.0, 1.0)
    with pytest.raises(ParameterError):
        thermal_occupation(1.0, -1.0)


def test_normalize_examples():
    m = normalize(PhysicalParams(gamma_m=0.002, T_env=0.015))
    assert m.gamma_m == 0.002
    assert m.gamma_m * m.omega_m == pytest.approx(1.131e8, rel=1e-3)
    assert m.delta_m == 0.055
    assert m.n_bar_m == pytest.approx(3.2e-13, rel=0.05)
    assert m.n_bar_m == pytest.approx(1 / math.expm1(HBAR * m.omega_m / (K_B * 0.015)), rel=1e-12)


def test_optical_occupation_negligible_when_cold():
    for T in (0.0, 0.015, 10.0, 100.0):
        assert normalize(PhysicalParams(T_env=T)).n_bar_o < 1e-30


def test_round_trip(ref_model):
    rates = denormalize(ref_model)
    back = from_absolute(rates, ref_model.omega_m, n_bar_o=ref_model.n_bar_o,
                         n_bar_m=ref_model.n_bar_m, omega_do=ref_model.omega_do,
                         omega_dm=ref_model.omega_dm)
    for name in rates:
        assert getattr(back, name) == pytest.approx(getattr(ref_model, name), rel=1e-12)


@pytest.mark.parametrize("field,value", [
    ("lambda_o", 0.0), ("f_m", -1.0), ("n_refr", float("nan")), ("P_o", -1e-3),
    ("d_gap", 1.0), ("gamma_o", 0.0), ("delta_m", 1.0), ("T_env", -0.1), ("l_crystal", 3e-3),
])
def test_invalid_physical_params(field, value):
    with pytest.raises(ParameterError) as info:
        PhysicalParams(**{field: value})
    assert isinstance(info.value, ValueError)


def test_invalid_normalized_model():
    with pytest.raises(ParameterError):
        NormalizedModel(g_norm=1e-6, E_o_norm=1.0, E_m_norm=1.0, gamma_o=-0.1, gamma_m=0.1,
                        delta_o=0.0, delta_m=0.0)
