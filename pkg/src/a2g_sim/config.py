"""JSON run configuration.

Missing keys take their defaults (the urban preset and the standard uplink
budget); unknown keys are rejected. ``RunConfig.to_dict`` echoes every
resolved value so runs can be reproduced from the emitted file.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any

from .channel import ENVIRONMENTS, URBAN, Environment, LinkBudget
from .clustering import ClusteringParams
from .errors import ConfigError, DomainError
from .geometry import AirPosition
from .scenario import ManualDevice, Scenario

SWEEP_DEFAULTS: dict[str, dict[str, Any]] = {
    "fig3": {"d_max_m": 1000.0, "step_m": 5.0},
    "fig4": {"theta_min_deg": 0.0, "theta_max_deg": 90.0, "step_deg": 0.5, "d_max_m": 1000.0},
    "fig5": {"d_max_m": 1000.0, "step_m": 5.0},
    "fig6": {
        "alphas": [2.0, 2.5, 3.0],
        "altitude": 100.0,
        "theta_min_deg": 5.0,
        "theta_max_deg": 90.0,
        "step_deg": 1.0,
    },
    "fig7": {"p_min_dbm": -150.0, "p_max_dbm": -90.0, "step_db": 0.5},
}

_TOP_KEYS = ("environment", "link_budget", "clustering", "uav", "sweeps", "manual_devices", "output")
_OUTPUT_FORMATS = ("csv", "json", "svg")


@dataclass(frozen=True)
class UavConfig:
    x: float = 0.0
    y: float = 0.0
    altitude: float = 100.0
    altitudes: tuple[float, ...] = (100.0, 150.0, 200.0)


@dataclass(frozen=True)
class OutputConfig:
    directory: str = "out"
    formats: tuple[str, ...] = ("csv", "svg")


@dataclass(frozen=True)
class RunConfig:
    environment: Environment = URBAN
    link_budget: LinkBudget = LinkBudget()
    clustering: ClusteringParams = ClusteringParams()
    uav: UavConfig = UavConfig()
    sweeps: dict[str, dict[str, Any]] = field(default_factory=lambda: json.loads(json.dumps(SWEEP_DEFAULTS)))
    manual_devices: tuple[ManualDevice, ...] = ()
    output: OutputConfig = OutputConfig()

    def scenario(self, altitude: float | None = None) -> Scenario:
        h = self.uav.altitude if altitude is None else altitude
        return Scenario(
            uav=AirPosition(self.uav.x, self.uav.y, h),
            environment=self.environment,
            link_budget=self.link_budget,
            clustering=self.clustering,
            manual_devices=self.manual_devices,
        )

    def with_overrides(self, seed: int | None = None, out: str | None = None) -> "RunConfig":
        cfg = self
        if seed is not None:
            cfg = replace(cfg, clustering=_build("clustering", ClusteringParams, {**asdict(cfg.clustering), "seed": seed}))
        if out is not None:
            cfg = replace(cfg, output=replace(cfg.output, directory=out))
        return cfg

    def to_dict(self) -> dict:
        return {
            "environment": asdict(self.environment),
            "link_budget": asdict(self.link_budget),
            "clustering": asdict(self.clustering),
            "uav": {**asdict(self.uav), "altitudes": list(self.uav.altitudes)},
            "sweeps": self.sweeps,
            "manual_devices": [asdict(m) for m in self.manual_devices],
            "output": {"directory": self.output.directory, "formats": list(self.output.formats)},
        }


def _is_number(v: Any) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _check_keys(section: str, given: dict, allowed) -> None:
    if not isinstance(given, dict):
        raise ConfigError(f"{section}: expected an object, got {type(given).__name__}")
    unknown = sorted(set(given) - set(allowed))
    if unknown:
        raise ConfigError(f"{section}: unknown key(s) {', '.join(unknown)}")


def _build(section: str, cls, values: dict):
    allowed = {f.name: f for f in fields(cls)}
    _check_keys(section, values, allowed)
    for k, v in values.items():
        if allowed[k].type in ("int",) and not (isinstance(v, int) and not isinstance(v, bool)):
            raise ConfigError(f"{section}.{k}: expected an integer, got {v!r}")
        if allowed[k].type in ("float",) and not _is_number(v):
            raise ConfigError(f"{section}.{k}: expected a number, got {v!r}")
        if allowed[k].type == "float" and not math.isfinite(v):
            raise ConfigError(f"{section}.{k}: must be finite")
    try:
        return cls(**values)
    except DomainError as exc:
        key = next((k for k in allowed if str(exc).startswith(k)), None)
        where = f"{section}.{key}" if key else section
        raise ConfigError(f"{where}: {exc}") from None


def _number_list(where: str, v: Any) -> tuple[float, ...]:
    if not isinstance(v, list) or not v or not all(_is_number(x) for x in v):
        raise ConfigError(f"{where}: expected a non-empty list of numbers")
    return tuple(float(x) for x in v)


def _environment(raw: Any) -> Environment:
    if isinstance(raw, str):
        raw = {"name": raw}
    _check_keys("environment", raw, ("name", "a", "b"))
    name = raw.get("name", "urban" if "a" not in raw and "b" not in raw else "custom")
    if not isinstance(name, str):
        raise ConfigError("environment.name: expected a string")
    if "a" in raw or "b" in raw:
        if not ("a" in raw and "b" in raw):
            raise ConfigError("environment: give both a and b")
        for k in ("a", "b"):
            if not _is_number(raw[k]):
                raise ConfigError(f"environment.{k}: expected a number, got {raw[k]!r}")
        try:
            return Environment(name, float(raw["a"]), float(raw["b"]))
        except DomainError as exc:
            raise ConfigError(f"environment: {exc}") from None
    if name not in ENVIRONMENTS:
        raise ConfigError(
            f"environment.name: unknown preset {name!r}; give explicit a and b "
            f"(presets: {', '.join(sorted(ENVIRONMENTS))})"
        )
    return ENVIRONMENTS[name]


def _uav(raw: dict) -> UavConfig:
    _check_keys("uav", raw, ("x", "y", "altitude", "altitudes"))
    values: dict[str, Any] = {}
    for k in ("x", "y", "altitude"):
        if k in raw:
            if not _is_number(raw[k]) or not math.isfinite(raw[k]):
                raise ConfigError(f"uav.{k}: expected a finite number, got {raw[k]!r}")
            values[k] = float(raw[k])
    if "altitudes" in raw:
        values["altitudes"] = _number_list("uav.altitudes", raw["altitudes"])
    cfg = UavConfig(**values)
    if cfg.altitude <= 0:
        raise ConfigError("uav.altitude: must be positive")
    if any(h <= 0 for h in cfg.altitudes):
        raise ConfigError("uav.altitudes: every altitude must be positive")
    return cfg


def _sweeps(raw: dict) -> dict[str, dict[str, Any]]:
    _check_keys("sweeps", raw, SWEEP_DEFAULTS)
    out = json.loads(json.dumps(SWEEP_DEFAULTS))
    for fig, overrides in raw.items():
        _check_keys(f"sweeps.{fig}", overrides, SWEEP_DEFAULTS[fig])
        for k, v in overrides.items():
            where = f"sweeps.{fig}.{k}"
            if isinstance(SWEEP_DEFAULTS[fig][k], list):
                out[fig][k] = list(_number_list(where, v))
            elif not _is_number(v) or not math.isfinite(v):
                raise ConfigError(f"{where}: expected a finite number, got {v!r}")
            else:
                out[fig][k] = float(v)
    return out


def _manual_devices(raw: Any) -> tuple[ManualDevice, ...]:
    if not isinstance(raw, list):
        raise ConfigError("manual_devices: expected a list")
    out = []
    for i, item in enumerate(raw):
        where = f"manual_devices[{i}]"
        _check_keys(where, item, ("x", "y", "energy"))
        for k in ("x", "y", "energy"):
            if k not in item:
                raise ConfigError(f"{where}.{k}: missing")
            if not _is_number(item[k]) or not math.isfinite(item[k]):
                raise ConfigError(f"{where}.{k}: expected a finite number, got {item[k]!r}")
        if not 0.0 <= item["energy"] <= 1.0:
            raise ConfigError(f"{where}.energy: must lie in [0, 1]")
        out.append(ManualDevice(float(item["x"]), float(item["y"]), float(item["energy"])))
    return tuple(out)


def _output(raw: dict) -> OutputConfig:
    _check_keys("output", raw, ("directory", "formats"))
    values: dict[str, Any] = {}
    if "directory" in raw:
        if not isinstance(raw["directory"], str):
            raise ConfigError("output.directory: expected a string")
        values["directory"] = raw["directory"]
    if "formats" in raw:
        fmts = raw["formats"]
        if not isinstance(fmts, list) or not all(f in _OUTPUT_FORMATS for f in fmts):
            raise ConfigError(f"output.formats: expected a list drawn from {list(_OUTPUT_FORMATS)}")
        values["formats"] = tuple(fmts)
    return OutputConfig(**values)


def config_from_dict(raw: Any) -> RunConfig:
    _check_keys("config", raw, _TOP_KEYS)
    lb_raw = raw.get("link_budget", {})
    cl_raw = raw.get("clustering", {})
    if isinstance(lb_raw, dict):
        lb_raw = {k: float(v) if _is_number(v) else v for k, v in lb_raw.items()}
    if isinstance(cl_raw, dict):
        cl_raw = {
            k: float(v) if _is_number(v) and k not in ("seed", "max_devices") else v
            for k, v in cl_raw.items()
        }
    return RunConfig(
        environment=_environment(raw.get("environment", {})),
        link_budget=_build("link_budget", LinkBudget, lb_raw),
        clustering=_build("clustering", ClusteringParams, cl_raw),
        uav=_uav(raw.get("uav", {})),
        sweeps=_sweeps(raw.get("sweeps", {})),
        manual_devices=_manual_devices(raw.get("manual_devices", [])),
        output=_output(raw.get("output", {})),
    )


def parse_config(path: str | Path) -> RunConfig:
    """Read and validate a JSON run configuration; raises ConfigError with location info."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config ({exc.strerror})") from None
    try:
        raw = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return config_from_dict(raw)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from None
