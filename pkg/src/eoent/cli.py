"""Command-line entry point.

Exit codes: 0 success, 2 configuration error, 3 numerical error,
4 no stable operating point.
"""
from __future__ import annotations

import argparse
import logging
import sys

from eoent import kernels
from eoent.config import load_config
from eoent.dynamics import resonance_prediction
from eoent.entanglement import entanglement_of
from eoent.errors import ConfigError, EOEntError
from eoent.params import coupling_g, drive_strengths, normalize
from eoent.presets import PRESETS, preset
from eoent.sweep import emit, find_max, run_sweep

log = logging.getLogger("eoent")


def _kv(key, value):
    if isinstance(value, float):
        value = format(value, ".9g")
    print(f"{key} = {value}")


def cmd_point(args) -> int:
    cfg = load_config(args.config)
    p = cfg.base
    m = normalize(p)
    e_o, e_m = drive_strengths(p)
    _kv("g_rad_per_s", coupling_g(p))
    _kv("g_norm", m.g_norm)
    _kv("E_o_per_s", e_o)
    _kv("E_m_per_s", e_m)
    _kv("n_bar_m", m.n_bar_m)
    ev = entanglement_of(m, branch=args.branch)
    for s in ev.branches:
        prefix = f"branch{s.branch_index}"
        _kv(f"{prefix}.x_photon", s.x_photon)
        _kv(f"{prefix}.stable", s.stable)
        _kv(f"{prefix}.max_re_eig", s.spectral_abscissa)
        _kv(f"{prefix}.rh_flags", ",".join(str(int(f)) for f in s.rh_flags))
    s = ev.state
    _kv("branch", s.branch_index)
    _kv("alpha_o_abs", abs(s.alpha_o))
    _kv("re_alpha_m", s.alpha_m.real)
    _kv("eta_minus", ev.result.eta_minus)
    _kv("E_N", ev.result.E_N)
    _kv("E_N_log2", ev.result.E_N_log2)
    res = resonance_prediction(m, s)
    _kv("optical_peaks", ",".join(format(v, ".6g") for v in res.optical_peaks))
    _kv("microwave_peaks", ",".join(format(v, ".6g") for v in res.microwave_peaks))
    return 0


def _report_sweep(result):
    for r in result.rows:
        if r.error:
            log.info("overlay %d, %s=%g: %s", r.overlay_id, r.axis, r.axis_value, r.error)
    stable = sum(1 for r in result.rows if r.stable)
    print(f"{len(result.rows)} points, {stable} stable")


def cmd_sweep(args) -> int:
    spec = load_config(args.config).sweep_spec()
    result = run_sweep(spec, workers=args.workers)
    for path in emit(result, args.out, stem=args.stem, plot=args.plot, log2=args.log2):
        print(path)
    _report_sweep(result)
    return 0


def cmd_figure(args) -> int:
    try:
        spec = preset(args.preset)
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from None
    result = run_sweep(spec, workers=args.workers)
    for path in emit(result, args.out, plot=not args.no_plot, log2=args.log2):
        print(path)
    _report_sweep(result)
    return 0


def cmd_maximize(args) -> int:
    spec = load_config(args.config).sweep_spec()
    best = find_max(spec, refine=args.refine)
    _kv("axis", spec.axis)
    _kv("axis_value", best.axis_value)
    _kv("overlay_id", best.overlay_id)
    _kv("E_N", best.E_N)
    _kv("resolution", best.resolution)
    for name, value in vars(best.params).items():
        _kv(f"params.{name}", value)
    return 0


def cmd_selftest(args) -> int:
    from eoent.acceptance import run_all

    print(f"kernel backend: {kernels.BACKEND}")
    checks = run_all()
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} criteria passed")
    return 0 if not failed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eoent", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate a single parameter point")
    p.add_argument("config")
    p.add_argument("--branch", type=int, default=None, help="steady-state branch (default: lowest stable)")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", help="run a configured parameter sweep")
    p.add_argument("config")
    p.add_argument("--out", default=".")
    p.add_argument("--stem", default=None, help="output file stem")
    p.add_argument("--plot", action="store_true", help="also write an SVG plot")
    p.add_argument("--log2", action="store_true", help="add a base-2 E_N column")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="run a builtin figure preset")
    p.add_argument("preset", help=", ".join(PRESETS))
    p.add_argument("--out", default="figures")
    p.add_argument("--no-plot", action="store_true")
    p.add_argument("--log2", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("maximize", help="search the sweep for maximal entanglement")
    p.add_argument("config")
    p.add_argument("--refine", type=int, default=0)
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("selftest", help="run the oracle and acceptance suites")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if not args.verbose:
        logging.getLogger("eoent.sweep").setLevel(logging.ERROR)
    try:
        return args.func(args)
    except EOEntError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
