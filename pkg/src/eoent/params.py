"""Device parameters, electro-optic coupling and the normalized model.

Everything downstream of :func:`normalize` works in units of the microwave
resonance frequency ``omega_m``: rates, detunings and drive strengths are all
divided by it. SI units appear only in :class:`PhysicalParams`.
"""
from __future__ import annotations

import dataclasses
import math
import numbers
from dataclasses import dataclass

from eoent.errors import ParameterError

# 2019 SI exact values
C_LIGHT = 299_792_458.0
HBAR = 1.054_571_817e-34
K_B = 1.380_649e-23

_POSITIVE = ("lambda_o", "f_m", "n_refr", "l_crystal", "L_cavity", "d_gap", "C_cap")
_NONNEGATIVE = ("r_eo", "P_o", "P_m", "T_env")


@dataclass(frozen=True)
class PhysicalParams:
    """Raw device, drive and environment parameters (SI units).

    Defaults are the lithium niobate device used throughout the figures
    (1064 nm, 9 GHz, r = 32 pm/V, n = 2.232, L = 2.1 mm, l = 2 mm,
    d = 50 um, C = 1 pF) with 30 mW drives at 15 mK.

    ``gamma_*`` and ``delta_*`` are given as fractions of ``omega_m``.
    """

    lambda_o: float = 1064e-9
    f_m: float = 9e9
    n_refr: float = 2.232
    r_eo: float = 32e-12
    l_crystal: float = 2e-3
    L_cavity: float = 2.1e-3
    d_gap: float = 50e-6
    C_cap: float = 1e-12
    P_o: float = 30e-3
    P_m: float = 30e-3
    gamma_o: float = 0.005
    gamma_m: float = 0.002
    delta_o: float = 0.002
    delta_m: float = 0.055
    T_env: float = 0.015

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                raise ParameterError(f.name, f"expected a number, got {value!r}")
            if not math.isfinite(value):
                raise ParameterError(f.name, f"must be finite, got {value!r}")
            object.__setattr__(self, f.name, float(value))
        for name in _POSITIVE:
            if getattr(self, name) <= 0:
                raise ParameterError(name, "must be strictly positive")
        for name in _NONNEGATIVE:
            if getattr(self, name) < 0:
                raise ParameterError(name, "must be nonnegative")
        for name in ("gamma_o", "gamma_m"):
            if getattr(self, name) <= 0:
                raise ParameterError(name, "damping rate must be strictly positive")
        if self.d_gap > self.L_cavity:
            raise ParameterError("d_gap", "electrode gap exceeds cavity length")
        if self.l_crystal > self.L_cavity:
            raise ParameterError("l_crystal", "crystal longer than cavity")
        if self.delta_m >= 1.0:
            raise ParameterError("delta_m", "microwave drive frequency must be positive")
        if optical_resonance(self) - self.delta_o * omega_m(self) <= 0:
            raise ParameterError("delta_o", "optical drive frequency must be positive")

    def replace(self, **changes) -> "PhysicalParams":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class NormalizedModel:
    """Dimensionless model: every rate is expressed in units of ``omega_m``.

    ``omega_m``, ``omega_do`` and ``omega_dm`` (rad/s) are carried along only
    for reporting and for converting back to absolute rates.
    """

    g_norm: float
    E_o_norm: float
    E_m_norm: float
    gamma_o: float
    gamma_m: float
    delta_o: float
    delta_m: float
    n_bar_o: float = 0.0
    n_bar_m: float = 0.0
    omega_m: float = 2 * math.pi * 9e9
    omega_do: float = 2 * math.pi * C_LIGHT / 1064e-9
    omega_dm: float = 2 * math.pi * 9e9

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if not math.isfinite(value):
                raise ParameterError(f.name, f"must be finite, got {value!r}")
            object.__setattr__(self, f.name, float(value))
        for name in ("g_norm", "E_o_norm", "E_m_norm", "n_bar_o", "n_bar_m"):
            if getattr(self, name) < 0:
                raise ParameterError(name, "must be nonnegative")
        for name in ("gamma_o", "gamma_m", "omega_m", "omega_do", "omega_dm"):
            if getattr(self, name) <= 0:
                raise ParameterError(name, "must be strictly positive")

    def replace(self, **changes) -> "NormalizedModel":
        return dataclasses.replace(self, **changes)


def omega_m(p: PhysicalParams) -> float:
    return 2 * math.pi * p.f_m


def optical_resonance(p: PhysicalParams) -> float:
    """Optical cavity resonance ``2 pi c / lambda`` in rad/s."""
    return 2 * math.pi * C_LIGHT / p.lambda_o


def drive_frequencies(p: PhysicalParams) -> tuple[float, float]:
    """Return the optical and microwave drive frequencies (rad/s).

    Detunings are resonance minus drive, so ``omega_do = omega_o - Delta_o``
    and ``omega_dm = omega_m - Delta_m``.
    """
    wm = omega_m(p)
    return optical_resonance(p) - p.delta_o * wm, wm * (1.0 - p.delta_m)


def round_trip_time(p: PhysicalParams) -> float:
    """Optical round-trip time of the Fabry-Perot cavity.

    The crystal contributes its optical path ``n * l``; the remaining
    ``L - l`` of the cavity is free space.
    """
    return 2.0 * (p.n_refr * p.l_crystal + (p.L_cavity - p.l_crystal)) / C_LIGHT


def _blame(p: PhysicalParams, names) -> str:
    default = PhysicalParams()

    def distance(name):
        value, ref = getattr(p, name), getattr(default, name)
        if value == 0 or ref == 0:
            return 0.0
        return abs(math.log10(abs(value) / abs(ref)))

    return max(names, key=distance)


def coupling_g(p: PhysicalParams) -> float:
    """Single-photon electro-optic coupling rate ``g`` in rad/s.

    ``g = omega_do n^3 r l / (c tau d) * sqrt(hbar omega_dm / 2C)``
    """
    w_do, w_dm = drive_frequencies(p)
    tau = round_trip_time(p)
    prefactor = w_do * p.n_refr**3 * p.r_eo * p.l_crystal / (C_LIGHT * tau * p.d_gap)
    try:
        g = prefactor * math.sqrt(HBAR * w_dm / (2.0 * p.C_cap))
    except (OverflowError, ValueError):
        g = math.inf
    if not math.isfinite(g) or (g == 0 and p.r_eo > 0):
        culprit = _blame(p, ("lambda_o", "n_refr", "r_eo", "l_crystal", "L_cavity", "d_gap", "C_cap", "f_m"))
        raise ParameterError(culprit, f"coupling rate is not representable (g = {g!r})")
    return g


def drive_strengths(p: PhysicalParams) -> tuple[float, float]:
    """Drive strengths ``E = sqrt(2 P gamma / hbar omega_d)`` in 1/s."""
    wm = omega_m(p)
    w_do, w_dm = drive_frequencies(p)
    e_o = math.sqrt(2.0 * p.P_o * p.gamma_o * wm / (HBAR * w_do))
    e_m = math.sqrt(2.0 * p.P_m * p.gamma_m * wm / (HBAR * w_dm))
    for name, value in (("P_o", e_o), ("P_m", e_m)):
        if not math.isfinite(value):
            raise ParameterError(name, "drive strength overflow")
    return e_o, e_m


def thermal_occupation(omega: float, T: float) -> float:
    """Bose-Einstein occupation ``1 / (exp(hbar omega / k_B T) - 1)``.

    Returns exactly 0 at ``T == 0``.
    """
    if omega <= 0:
        raise ParameterError("omega", "must be strictly positive")
    if T < 0:
        raise ParameterError("T", "must be nonnegative")
    if T == 0:
        return 0.0
    x = HBAR * omega / (K_B * T)
    if x > 700.0:
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def normalize(p: PhysicalParams) -> NormalizedModel:
    wm = omega_m(p)
    e_o, e_m = drive_strengths(p)
    w_do, w_dm = drive_frequencies(p)
    return NormalizedModel(
        g_norm=coupling_g(p) / wm,
        E_o_norm=e_o / wm,
        E_m_norm=e_m / wm,
        gamma_o=p.gamma_o,
        gamma_m=p.gamma_m,
        delta_o=p.delta_o,
        delta_m=p.delta_m,
        n_bar_o=thermal_occupation(optical_resonance(p), p.T_env),
        n_bar_m=thermal_occupation(wm, p.T_env),
        omega_m=wm,
        omega_do=w_do,
        omega_dm=w_dm,
    )


RATE_FIELDS = ("g_norm", "E_o_norm", "E_m_norm", "gamma_o", "gamma_m", "delta_o", "delta_m")


def denormalize(m: NormalizedModel) -> dict[str, float]:
    """Absolute rates in rad/s (or 1/s for drives), keyed like the model."""
    return {name: getattr(m, name) * m.omega_m for name in RATE_FIELDS}


def from_absolute(rates: dict[str, float], omega_m: float, **extra) -> NormalizedModel:
    """Inverse of :func:`denormalize`."""
    return NormalizedModel(**{k: v / omega_m for k, v in rates.items()}, omega_m=omega_m, **extra)
