"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is timed on the same inputs for every available backend; the
last section times a full preset sweep with the backend forced through
``EOENT_PURE_PYTHON`` in a subprocess.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from eoent import kernels
from eoent.oracles import random_model, random_stable_matrix


def _inputs(n, seed=7):
    rng = np.random.default_rng(seed)
    models = [random_model(rng) for _ in range(n)]
    mats = [(random_stable_matrix(rng), np.diag(rng.uniform(0, 2, 4))) for _ in range(n)]
    return models, mats


def bench_backend(impl, models, mats, repeat):
    args = [(m.g_norm, m.E_o_norm, m.E_m_norm, m.gamma_o, m.gamma_m, m.delta_o, m.delta_m) for m in models]
    sols = [impl.lyapunov_solve(A, D) for A, D in mats]
    cases = {
        "steady_photon_numbers": lambda: [impl.steady_photon_numbers(*a) for a in args],
        "lyapunov_solve": lambda: [impl.lyapunov_solve(A, D) for A, D in mats],
        "covariance_invariants": lambda: [impl.covariance_invariants(V) for V in sols],
    }
    n = len(models)
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) / n for name, fn in cases.items()}


def bench_sweep(preset, pure):
    env = dict(os.environ)
    if pure:
        env["EOENT_PURE_PYTHON"] = "1"
    code = ("import time; from eoent import kernels; from eoent.presets import preset; "
            "from eoent.sweep import run_sweep; s = preset(%r); t = time.perf_counter(); run_sweep(s); "
            "print(kernels.BACKEND, time.perf_counter() - t)" % preset)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, seconds = out.stdout.split()
    return backend, float(seconds)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2000, help="inputs per kernel")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--preset", default="3a")
    args = parser.parse_args(argv)

    models, mats = _inputs(args.n)
    backends = kernels.backends()
    results = {name: bench_backend(impl, models, mats, args.repeat) for name, impl in backends.items()}
    names = sorted(results)
    print(f"{'kernel':<24}" + "".join(f"{n + ' (us)':>16}" for n in names)
          + ("   speedup" if len(names) == 2 else ""))
    for kernel in results[names[0]]:
        row = [results[n][kernel] * 1e6 for n in names]
        line = f"{kernel:<24}" + "".join(f"{t:>16.2f}" for t in row)
        if len(names) == 2:
            line += f"   {results['python'][kernel] / results['cython'][kernel]:7.1f}x"
        print(line)

    print(f"\nfull sweep of preset {args.preset}:")
    for pure in (False, True):
        backend, seconds = bench_sweep(args.preset, pure)
        print(f"  {backend:<8} {seconds:8.3f} s")


if __name__ == "__main__":
    main()
