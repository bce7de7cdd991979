import pytest

from eoent.config import format_config, load_config, parse_config
from eoent.errors import ConfigError
from eoent.presets import preset

GOOD = """
# detuning sweep
P_o = 0.03
P_m = 0.03   # trailing comment
gamma_o = 0.005
axis = delta_o
range = -0.2, 0.2, 21
overlay = gamma_o:0.005
overlay = gamma_o:0.01, gamma_m:0.005
"""


def test_parse_good():
    cfg = parse_config(GOOD)
    assert cfg.base.P_o == 0.03 and cfg.base.gamma_o == 0.005
    assert cfg.base.lambda_o == 1064e-9
    spec = cfg.sweep_spec()
    assert (spec.axis, spec.start, spec.stop, spec.count) == ("delta_o", -0.2, 0.2, 21)
    assert spec.curves() == [{"gamma_o": 0.005}, {"gamma_o": 0.01, "gamma_m": 0.005}]


@pytest.mark.parametrize("text", [
    "bogus = 1",
    "P_o = abc",
    "P_o = 1\nP_o = 2",
    "P_o 1",
    "range = 0,1",
    "range = 0,1,2.5",
    "overlay = nothere:1",
    "overlay = gamma_o",
    "gamma_o = -1",
])
def test_parse_errors(text):
    with pytest.raises(ConfigError) as info:
        parse_config(text, source="x.cfg")
    assert info.value.exit_code == 2
    assert "x.cfg" in str(info.value)


def test_sweep_needs_axis_and_range():
    with pytest.raises(ConfigError):
        parse_config("P_o = 0.1").sweep_spec()
    with pytest.raises(ConfigError):
        parse_config("axis = r_eo\nrange = 0,1,3").sweep_spec()


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.cfg")


def test_round_trip(tmp_path):
    spec = preset("2b")
    path = tmp_path / "2b.cfg"
    path.write_text(format_config(spec))
    again = load_config(path).sweep_spec(name="2b")
    assert again == spec
