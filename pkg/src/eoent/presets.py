"""Builtin sweeps over the reference operating regimes.

Grid density and the spans of the detuning and power axes are fixed here:
201 points, detunings over [-0.2, 0.2], powers over [1, 300] mW and
temperature over [15 mK, 30 K].
"""
from __future__ import annotations

from eoent.params import PhysicalParams
from eoent.sweep import SweepSpec

GRID = 201
DETUNING_SPAN = (-0.2, 0.2)
POWER_SPAN = (1e-3, 0.3)
TEMPERATURE_SPAN = (0.015, 30.0)

WAVELENGTHS = ({"lambda_o": 1064e-9, "n_refr": 2.232},
               {"lambda_o": 1310e-9, "n_refr": 2.220},
               {"lambda_o": 1550e-9, "n_refr": 2.211})
FREQUENCIES = ({"f_m": 3e9}, {"f_m": 6e9}, {"f_m": 9e9})

_LOW_T = PhysicalParams(T_env=0.015, P_o=0.03, P_m=0.03)


def _spec(name, base, axis, span, overlays):
    return SweepSpec(base=base, axis=axis, start=span[0], stop=span[1], count=GRID,
                     overlays=tuple(overlays), name=name)


def _build():
    strong = PhysicalParams(P_o=0.2, P_m=0.2, delta_o=0.002, delta_m=0.055)
    return {
        "2a": _spec("2a", strong.replace(gamma_m=0.0005), "T_env", TEMPERATURE_SPAN,
                    [{"gamma_o": v} for v in (0.015, 0.02, 0.03)]),
        "2b": _spec("2b", strong.replace(gamma_o=0.02), "T_env", TEMPERATURE_SPAN,
                    [{"gamma_m": v} for v in (0.0005, 0.001, 0.0015)]),
        "3a": _spec("3a", _LOW_T.replace(gamma_m=0.002, delta_m=0.055), "delta_o", DETUNING_SPAN,
                    [{"gamma_o": v} for v in (0.005, 0.008, 0.01)]),
        "3b": _spec("3b", _LOW_T.replace(gamma_o=0.005, delta_m=0.055), "delta_o", DETUNING_SPAN,
                    [{"gamma_m": v} for v in (0.002, 0.005, 0.01)]),
        "4a": _spec("4a", _LOW_T.replace(gamma_m=0.002, delta_o=0.002), "delta_m", DETUNING_SPAN,
                    [{"gamma_o": v} for v in (0.005, 0.008, 0.01)]),
        "4b": _spec("4b", _LOW_T.replace(gamma_o=0.005, delta_o=0.002), "delta_m", DETUNING_SPAN,
                    [{"gamma_m": v} for v in (0.002, 0.005, 0.01)]),
        "5": _spec("5", _LOW_T.replace(gamma_o=0.005, gamma_m=0.002, delta_m=0.055), "delta_o",
                   DETUNING_SPAN, WAVELENGTHS),
        "6": _spec("6", _LOW_T.replace(gamma_o=0.015, gamma_m=0.002, delta_o=0.002), "delta_m",
                   DETUNING_SPAN, FREQUENCIES),
        "7": _spec("7", _LOW_T.replace(gamma_o=0.005, gamma_m=0.002, delta_o=0.002, delta_m=0.055),
                   "P_o", POWER_SPAN, WAVELENGTHS),
        "8": _spec("8", _LOW_T.replace(gamma_o=0.015, gamma_m=0.002, delta_o=0.002, delta_m=0.055),
                   "P_m", POWER_SPAN, FREQUENCIES),
    }


PRESETS: dict[str, SweepSpec] = _build()


def preset(name: str) -> SweepSpec:
    key = name.lower().removeprefix("fig").strip()
    try:
        return PRESETS[key]
    except KeyError:
        raise KeyError(f"unknown figure preset {name!r}; choose from {', '.join(PRESETS)}") from None
