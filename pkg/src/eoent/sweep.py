"""Declarative parameter sweeps, maximum search and CSV/plot output."""
from __future__ import annotations

import csv
import dataclasses
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from eoent.entanglement import log_negativity
from eoent.errors import EOEntError, NoMaximumError, ParameterError
from eoent.linear_model import covariance_at
from eoent.params import PhysicalParams, normalize
from eoent.steady_state import default_branch, solve_steady_states

log = logging.getLogger(__name__)

AXES = ("T_env", "delta_o", "delta_m", "P_o", "P_m", "lambda_o", "f_m", "gamma_o", "gamma_m")
PARAM_FIELDS = tuple(f.name for f in dataclasses.fields(PhysicalParams))
MAX_COUNT = 10**6
MAX_REFINE = 12

CSV_HEADER = ("axis", "overlay_id", "axis_value", "E_N", "eta_minus", "stable", "branch",
              "alpha_o_abs", "re_alpha_m", "rh1", "rh2", "rh3", "rh4")

AXIS_LABELS = {
    "T_env": "T (K)",
    "delta_o": r"$\Delta_o/\omega_m$",
    "delta_m": r"$\Delta_m/\omega_m$",
    "P_o": r"$P_o$ (W)",
    "P_m": r"$P_m$ (W)",
    "lambda_o": r"$\lambda$ (m)",
    "f_m": r"$f_m$ (Hz)",
    "gamma_o": r"$\gamma_o/\omega_m$",
    "gamma_m": r"$\gamma_m/\omega_m$",
}


def linear_grid(start: float, stop: float, count: int) -> np.ndarray:
    """Inclusive grid; for odd counts the midpoint is exactly ``(start+stop)/2``."""
    i = np.arange(count, dtype=float)
    return (start * (count - 1 - i) + stop * i) / (count - 1)


@dataclass(frozen=True)
class SweepSpec:
    base: PhysicalParams
    axis: str
    start: float
    stop: float
    count: int = 201
    overlays: tuple = ()
    name: str = ""

    def __post_init__(self):
        if self.axis not in AXES:
            raise ParameterError("axis", f"{self.axis!r} is not one of {', '.join(AXES)}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop) and self.start < self.stop):
            raise ParameterError("range", f"need start < stop, got {self.start!r}, {self.stop!r}")
        if int(self.count) != self.count or not 2 <= self.count <= MAX_COUNT:
            raise ParameterError("range", f"count must be an integer in [2, {MAX_COUNT}]")
        object.__setattr__(self, "count", int(self.count))
        overlays = tuple(tuple((str(k), float(v)) for k, v in dict(o).items()) for o in self.overlays)
        for o in overlays:
            for key, _ in o:
                if key not in PARAM_FIELDS:
                    raise ParameterError("overlay", f"unknown parameter {key!r}")
                if key == self.axis:
                    raise ParameterError("overlay", f"swept axis {key!r} cannot be overlaid")
        object.__setattr__(self, "overlays", overlays)

    def grid(self) -> np.ndarray:
        return linear_grid(self.start, self.stop, self.count)

    def curves(self) -> list[dict]:
        return [dict(o) for o in self.overlays] or [{}]

    def params_at(self, overlay_id: int, value: float) -> PhysicalParams:
        return self.base.replace(**self.curves()[overlay_id], **{self.axis: float(value)})


@dataclass(frozen=True)
class SweepRow:
    axis: str
    overlay_id: int
    axis_value: float
    E_N: float
    eta_minus: float
    stable: bool | None
    branch: int | None
    alpha_o_abs: float
    re_alpha_m: float
    rh_flags: tuple | None
    error: str | None = None

    @property
    def E_N_log2(self) -> float:
        return self.E_N / math.log(2.0)


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple

    def curve(self, overlay_id: int) -> tuple[np.ndarray, np.ndarray]:
        rows = [r for r in self.rows if r.overlay_id == overlay_id]
        return (np.array([r.axis_value for r in rows]), np.array([r.E_N for r in rows]))


def evaluate_point(p: PhysicalParams) -> dict:
    """One sweep point; failures are captured instead of raised."""
    nan = math.nan
    out = dict(E_N=nan, eta_minus=nan, stable=None, branch=None,
               alpha_o_abs=nan, re_alpha_m=nan, rh_flags=None, error=None)
    try:
        m = normalize(p)
        branches = solve_steady_states(m)
        state = default_branch(branches)
        if state is None:
            state = branches[0]
            out.update(stable=False, error="all branches unstable")
        else:
            res = log_negativity(covariance_at(m, state).V)
            out.update(E_N=res.E_N, eta_minus=res.eta_minus, stable=True)
        out.update(branch=state.branch_index, alpha_o_abs=abs(state.alpha_o),
                   re_alpha_m=state.alpha_m.real, rh_flags=state.rh_flags)
    except (EOEntError, ArithmeticError, np.linalg.LinAlgError) as exc:
        out.update(E_N=nan, eta_minus=nan, error=f"{type(exc).__name__}: {exc}")
        log.warning("point %r failed: %s", p, exc)
    return out


def _evaluate_chunk(args):
    spec, jobs = args
    return [(oid, i, evaluate_point(spec.params_at(oid, v))) for oid, i, v in jobs]


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Evaluate every grid point, overlay-major and axis-minor.

    ``workers > 1`` spreads the points over a process pool; output order
    does not depend on it.
    """
    grid = spec.grid()
    jobs = [(oid, i, v) for oid in range(len(spec.curves())) for i, v in enumerate(grid)]
    if workers > 1 and len(jobs) > 1:
        size = math.ceil(len(jobs) / (4 * workers))
        chunks = [(spec, jobs[k:k + size]) for k in range(0, len(jobs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = [item for part in pool.map(_evaluate_chunk, chunks) for item in part]
    else:
        done = _evaluate_chunk((spec, jobs))
    done.sort(key=lambda item: (item[0], item[1]))
    rows = tuple(
        SweepRow(axis=spec.axis, overlay_id=oid, axis_value=float(grid[i]), **values)
        for oid, i, values in done
    )
    return SweepResult(spec, rows)


@dataclass(frozen=True)
class MaxResult:
    params: PhysicalParams
    E_N: float
    axis_value: float
    overlay_id: int
    resolution: float


def _argmax(values, scores):
    best = None
    for v, s in zip(values, scores):
        if math.isnan(s):
            continue
        # ties go to the smaller axis value: strict > on an ascending scan
        if best is None or s > best[1]:
            best = (v, s)
    return best


def find_max(spec: SweepSpec, refine: int = 0,
             objective: Callable[[PhysicalParams], float] | None = None) -> MaxResult:
    """Grid argmax followed by ``refine`` rounds of 4x zoom around the best point.

    ``objective`` replaces the entanglement evaluation (test hook); it must
    return NaN for points that have no value.
    """
    if int(refine) != refine or not 0 <= refine <= MAX_REFINE:
        raise ParameterError("refine", f"must be an integer in [0, {MAX_REFINE}]")
    if objective is None:
        def objective(p):
            return evaluate_point(p)["E_N"]

    grid = spec.grid()
    best = None
    for oid in range(len(spec.curves())):
        hit = _argmax(grid, [objective(spec.params_at(oid, v)) for v in grid])
        if hit is not None and (best is None or hit[1] > best[1]):
            best = (hit[0], hit[1], oid)
    if best is None:
        raise NoMaximumError(f"no stable point in sweep {spec.name or spec.axis}")
    value, score, oid = best
    width = spec.stop - spec.start
    for _ in range(int(refine)):
        width /= 4.0
        lo = min(max(value - width / 2.0, spec.start), spec.stop - width)
        sub = linear_grid(lo, lo + width, spec.count)
        hit = _argmax(sub, [objective(spec.params_at(oid, v)) for v in sub])
        if hit is not None and (hit[1] > score or (hit[1] == score and hit[0] < value)):
            value, score = hit
    return MaxResult(params=spec.params_at(oid, value), E_N=float(score), axis_value=float(value),
                     overlay_id=oid, resolution=width / (spec.count - 1))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if math.isnan(value):
        return ""
    return format(value, ".9g")


def csv_rows(result: SweepResult, log2: bool = False):
    header = list(CSV_HEADER) + (["E_N_log2"] if log2 else [])
    yield header
    for r in result.rows:
        flags = r.rh_flags if r.rh_flags is not None else (None,) * 4
        line = [r.axis, r.overlay_id, r.axis_value, r.E_N, r.eta_minus, r.stable, r.branch,
                r.alpha_o_abs, r.re_alpha_m, *flags]
        if log2:
            line.append(r.E_N_log2)
        yield [_fmt(v) if not isinstance(v, str) else v for v in line]


def write_csv(result: SweepResult, path, log2: bool = False) -> Path:
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerows(csv_rows(result, log2=log2))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path


def write_plot(result: SweepResult, path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    spec = result.spec
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    for oid, overlay in enumerate(spec.curves()):
        x, y = result.curve(oid)
        label = ", ".join(f"{k}={v:g}" for k, v in overlay.items()) or None
        ax.plot(x, y, label=label)
    ax.set_xlabel(AXIS_LABELS.get(spec.axis, spec.axis))
    ax.set_ylabel(r"$E_N$")
    if spec.name:
        ax.set_title(f"preset {spec.name}")
    if spec.overlays:
        ax.legend(fontsize="small")
    fig.tight_layout()
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    finally:
        plt.close(fig)
    return path


def emit(result: SweepResult, out_dir=".", stem: str | None = None, plot: bool = False,
         log2: bool = False) -> list[Path]:
    """Write ``<stem>.csv`` (and ``<stem>.svg`` with ``plot``) into ``out_dir``."""
    if not result.rows:
        raise ValueError("empty sweep result")
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create {out_dir}: {exc}") from exc
    stem = stem or (f"fig{result.spec.name}" if result.spec.name else f"sweep_{result.spec.axis}")
    paths = [write_csv(result, out_dir / f"{stem}.csv", log2=log2)]
    if plot:
        paths.append(write_plot(result, out_dir / f"{stem}.svg"))
    return paths
