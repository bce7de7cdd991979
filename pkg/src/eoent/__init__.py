"""Steady-state light-microwave entanglement in an electro-optic cavity system."""
from eoent.entanglement import EntanglementResult, Evaluation, entanglement_of, log_negativity
from eoent.kernels import BACKEND
from eoent.linear_model import LinearSystem, build_diffusion, build_drift, covariance_at, solve_lyapunov
from eoent.params import (NormalizedModel, PhysicalParams, coupling_g, drive_strengths, normalize,
                          thermal_occupation)
from eoent.steady_state import SteadyState, routh_hurwitz, solve_steady_states, spectral_stability
from eoent.sweep import SweepResult, SweepSpec, emit, find_max, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EntanglementResult", "Evaluation", "LinearSystem", "NormalizedModel", "PhysicalParams",
    "SteadyState", "SweepResult", "SweepSpec", "build_diffusion", "build_drift", "coupling_g",
    "covariance_at", "drive_strengths", "emit", "entanglement_of", "find_max", "log_negativity",
    "normalize", "routh_hurwitz", "run_sweep", "solve_lyapunov", "solve_steady_states",
    "spectral_stability", "thermal_occupation",
]
