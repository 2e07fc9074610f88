"""User flags controlling which rewrites the preprocessor applies."""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any

DEFAULT_ASSET_DIR = Path(__file__).resolve().parent / "data"
ENV_PREFIX = "LIP_"

FLAG_NAMES = (
    "allow_punctuation_spamming",
    "allow_emoji_spamming",
    "disable_pii_masking",
    "show_phonenumber",
    "rm_common_abbr",
)

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class ConfigError(ValueError):
    """Raised for unreadable config files, unknown keys and non-boolean flags."""


@dataclass(frozen=True)
class Config:
    allow_punctuation_spamming: bool = False
    allow_emoji_spamming: bool = False
    disable_pii_masking: bool = False
    show_phonenumber: bool = True
    rm_common_abbr: bool = True
    asset_dir: Path = field(default=DEFAULT_ASSET_DIR)

    def with_overrides(self, **overrides: Any) -> Config:
        return replace(self, **_validate(overrides, source="overrides"))


def _validate(values: Mapping[str, Any], source: str) -> dict[str, Any]:
    known = {f.name for f in fields(Config)}
    out: dict[str, Any] = {}
    for key, value in values.items():
        if key not in known:
            raise ConfigError(f"{source}: unknown key {key!r}")
        if key == "asset_dir":
            if not isinstance(value, (str, Path)):
                raise ConfigError(f"{source}: asset_dir must be a path, got {value!r}")
            out[key] = Path(value)
        elif not isinstance(value, bool):
            raise ConfigError(f"{source}: {key} must be a boolean, got {value!r}")
        else:
            out[key] = value
    return out


def _parse_bool(key: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ConfigError(f"environment: {key} must be true or false, got {raw!r}")


def _from_env(env: Mapping[str, str]) -> dict[str, Any]:
    values: dict[str, Any] = {}
    for name, raw in env.items():
        if not name.startswith(ENV_PREFIX):
            continue
        key = name[len(ENV_PREFIX) :].lower()
        if key == "asset_dir":
            values[key] = raw
        elif key in FLAG_NAMES:
            values[key] = _parse_bool(name, raw)
        else:
            raise ConfigError(f"environment: unknown key {name!r}")
    return values


def load_config(
    file_path: str | Path | None = None,
    env_overrides: Mapping[str, str] | None = None,
    cli_overrides: Mapping[str, Any] | None = None,
) -> Config:
    """Build a Config; later sources win: defaults < file < env < cli.

    ``env_overrides`` uses ``LIP_<FLAG>`` names with ``true``/``false`` values.
    Entries whose value is ``None`` in ``cli_overrides`` are ignored so argparse
    namespaces can be passed through unchanged.
    """
    merged: dict[str, Any] = {}
    if file_path is not None:
        try:
            data = json.loads(Path(file_path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot load config {file_path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"config {file_path} must hold a JSON object")
        merged.update(_validate(data, source=str(file_path)))
    if env_overrides:
        merged.update(_validate(_from_env(env_overrides), source="environment"))
    if cli_overrides:
        given = {k: v for k, v in cli_overrides.items() if v is not None}
        merged.update(_validate(given, source="command line"))
    return Config(**merged)
