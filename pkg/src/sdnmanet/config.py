"""Scenario config files: flat ``key = value`` lines with dotted keys.

``#`` starts a comment, blank lines are ignored, and keys are dotted paths
mirroring ``ScenarioConfig`` fields (``controller.capacity_mu = 10``,
``topology.link_probability = 0.05``, or bare root fields such as
``seed = 7``). Unknown keys, malformed values, and invariant violations are
rejected with the offending key and line number. Absent keys keep the
calibrated defaults, so an empty file is the reference scenario.
"""

from __future__ import annotations

import dataclasses
from typing import Any

from .simulator import ScenarioConfig


class ConfigError(ValueError):
    """A scenario config file could not be parsed or validated."""


def _field_registry() -> dict[str, tuple[str | None, str, type]]:
    """Map config key -> (group field or None, field name, value type)."""
    registry: dict[str, tuple[str | None, str, type]] = {}
    for group_field in dataclasses.fields(ScenarioConfig):
        default = group_field.default_factory() if group_field.default_factory is not dataclasses.MISSING else None
        if default is not None and dataclasses.is_dataclass(default):
            for sub in dataclasses.fields(default):
                key = f"{group_field.name}.{sub.name}"
                registry[key] = (group_field.name, sub.name, type(getattr(default, sub.name)))
        else:
            registry[group_field.name] = (None, group_field.name, type(group_field.default))
    return registry


_REGISTRY = _field_registry()


def _parse_value(raw: str, target: type, key: str, line_no: int, path: str) -> Any:
    try:
        if target is bool:
            lowered = raw.lower()
            if lowered in ("true", "1", "yes"):
                return True
            if lowered in ("false", "0", "no"):
                return False
            raise ValueError(raw)
        if target is int:
            if "." in raw or "e" in raw.lower():
                raise ValueError(raw)
            return int(raw)
        if target is float:
            return float(raw)
        return target(raw)
    except ValueError:
        raise ConfigError(
            f"{path}:{line_no}: value {raw!r} for key '{key}' is not a valid {target.__name__}"
        ) from None


def parse_config(path: str) -> ScenarioConfig:
    """Read, type-check, and validate a scenario config file."""
    overrides: dict[str, Any] = {}
    key_lines: dict[str, int] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc

    for line_no, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ConfigError(f"{path}:{line_no}: expected 'key = value', got {line.strip()!r}")
        key, raw = (part.strip() for part in text.split("=", 1))
        if key not in _REGISTRY:
            raise ConfigError(f"{path}:{line_no}: unknown key '{key}'")
        if key in overrides:
            raise ConfigError(f"{path}:{line_no}: duplicate key '{key}' (first set on line {key_lines[key]})")
        _, _, target = _REGISTRY[key]
        overrides[key] = _parse_value(raw, target, key, line_no, path)
        key_lines[key] = line_no

    cfg = ScenarioConfig()
    grouped: dict[str, dict[str, Any]] = {}
    for key, value in overrides.items():
        group, name, _ = _REGISTRY[key]
        if group is None:
            setattr(cfg, name, value)
        else:
            grouped.setdefault(group, {})[name] = value
    for group, values in grouped.items():
        try:
            setattr(cfg, group, dataclasses.replace(getattr(cfg, group), **values))
        except ValueError as exc:
            first_key = f"{group}.{next(iter(values))}"
            raise ConfigError(
                f"{path}:{key_lines[first_key]}: invalid '{group}' settings: {exc}"
            ) from exc

    try:
        cfg.validate()
    except ValueError as exc:
        message = str(exc)  # begins with the offending dotted field path
        culprit = next((k for k in key_lines if message.startswith(k)), None)
        where = f"{path}:{key_lines[culprit]}: " if culprit else f"{path}: "
        raise ConfigError(f"{where}{message}") from exc
    return cfg
