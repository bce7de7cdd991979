"""Line-oriented ``key = value`` configuration files.

Recognized keys are the :class:`~eoent.params.PhysicalParams` field names
plus ``axis``, ``range = start,stop,count`` and any number of
``overlay = key:value[,key:value...]`` lines. ``#`` starts a comment.
Unspecified physical parameters keep their defaults.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from eoent.errors import ConfigError, ParameterError
from eoent.params import PhysicalParams
from eoent.sweep import PARAM_FIELDS, SweepSpec


@dataclass(frozen=True)
class Config:
    base: PhysicalParams
    axis: str | None = None
    range: tuple | None = None
    overlays: tuple = ()
    source: str = "<config>"

    def sweep_spec(self, name: str = "") -> SweepSpec:
        if self.axis is None or self.range is None:
            raise ConfigError(f"{self.source}: a sweep needs both 'axis' and 'range'")
        start, stop, count = self.range
        try:
            return SweepSpec(base=self.base, axis=self.axis, start=start, stop=stop, count=count,
                             overlays=self.overlays, name=name)
        except ParameterError as exc:
            raise ConfigError(f"{self.source}: {exc}") from exc


def _number(text: str, where: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{where}: not a number: {text!r}") from None


def parse_config(text: str, source: str = "<config>") -> Config:
    values: dict[str, float] = {}
    axis = None
    span = None
    overlays = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        where = f"{source}:{lineno}"
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{where}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key != "overlay":
            if key in seen:
                raise ConfigError(f"{where}: duplicate key {key!r}")
            seen.add(key)
        if key in PARAM_FIELDS:
            values[key] = _number(value, where)
        elif key == "axis":
            axis = value
        elif key == "range":
            parts = [p.strip() for p in value.split(",")]
            if len(parts) != 3:
                raise ConfigError(f"{where}: range must be 'start,stop,count'")
            count = _number(parts[2], where)
            if count != int(count):
                raise ConfigError(f"{where}: count must be an integer")
            span = (_number(parts[0], where), _number(parts[1], where), int(count))
        elif key == "overlay":
            overlay = {}
            for item in value.split(","):
                name, sep, v = item.partition(":")
                name = name.strip()
                if not sep or name not in PARAM_FIELDS:
                    raise ConfigError(f"{where}: bad overlay item {item.strip()!r}")
                overlay[name] = _number(v.strip(), where)
            overlays.append(overlay)
        else:
            raise ConfigError(f"{where}: unknown key {key!r}")
    try:
        base = PhysicalParams(**values)
    except ParameterError as exc:
        raise ConfigError(f"{source}: {exc}") from exc
    return Config(base=base, axis=axis, range=span, overlays=tuple(overlays), source=source)


def load_config(path) -> Config:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    return parse_config(text, source=str(path))


def format_config(spec: SweepSpec) -> str:
    """Serialize a sweep back into the config format."""
    lines = [f"{name} = {getattr(spec.base, name)!r}" for name in PARAM_FIELDS]
    lines.append(f"axis = {spec.axis}")
    lines.append(f"range = {spec.start!r},{spec.stop!r},{spec.count}")
    for overlay in spec.overlays:
        lines.append("overlay = " + ",".join(f"{k}:{v!r}" for k, v in overlay))
    return "\n".join(lines) + "\n"
