"""Acceptance gate: one PASS/FAIL line per criterion.

The lines are echoed in the pytest terminal summary; running this file
directly (``python tests/test_acceptance.py``) prints them as well.
"""
import pytest

from eoent import acceptance

LINES = []


def _record(check):
    LINES.append(check.line())
    LINES.extend(f"    {line}" for line in check.report)
    print(check.line())
    for line in check.report:
        print(f"    {line}")
    return check


@pytest.fixture(scope="module")
def preset_results():
    check, results = acceptance.check_suite_runtime()
    return check, results


def test_01_lyapunov_correctness():
    assert _record(acceptance.check_lyapunov()).passed


def test_02_negativity_exactness():
    assert _record(acceptance.check_negativity()).passed


def test_03_steady_state_correctness():
    assert _record(acceptance.check_steady_states()).passed


def test_04_stability_consistency():
    assert _record(acceptance.check_stability()).passed


def test_05_temperature_trend(preset_results):
    assert _record(acceptance.check_temperature_trend(preset_results[1]["2a"])).passed


def test_06_sideband_structure(preset_results):
    assert _record(acceptance.check_sideband_structure(preset_results[1]["6"])).passed


def test_07_peak_magnitude():
    assert _record(acceptance.check_peak()).passed


def test_08_determinism():
    assert _record(acceptance.check_determinism()).passed


def test_09_preset_suite_runtime(preset_results):
    check = _record(preset_results[0])
    LINES.append("resonance predictor vs 4a sweep (reported, not asserted):")
    LINES.extend(f"    {line}" for line in acceptance.resonance_report(preset_results[1]["4a"]))
    assert check.passed


if __name__ == "__main__":
    checks = acceptance.run_all()
    raise SystemExit(0 if all(c.passed for c in checks) else 1)
