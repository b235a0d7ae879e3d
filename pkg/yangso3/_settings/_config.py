from __future__ import annotations

import argparse
import copy
import importlib
import sys
from collections.abc import Callable
from pathlib import Path
from types import ModuleType, SimpleNamespace
from typing import Any

from yangso3.exact import format_rational, rational

if sys.version_info >= (3, 10):
    from typing import TypeAlias

    # NOTE: Python 3.12 introduces the type statement, so once Python 3.11 is dropped,
    # it should be updated to use that instead.
    Config: TypeAlias = SimpleNamespace | ModuleType
else:
    from typing import Union

    from typing_extensions import TypeAlias

    Config: TypeAlias = Union[SimpleNamespace, ModuleType]


class ConfigurationError(ValueError):
    """The run configuration is invalid; the command line exits with status 2."""


def load_config(name: str = "default") -> SimpleNamespace:
    """
    Load a configuration module from `yangso3.config` by name.

    Args:
        name (str): Module name, e.g. "default" or "quick".

    Returns:
        SimpleNamespace: A private copy of the module's settings.

    Raises:
        ConfigurationError: If no such configuration exists.
    """
    try:
        _cfg = importlib.import_module(f"yangso3.config.{name}")
    except ModuleNotFoundError:
        raise ConfigurationError(f"Unknown configuration: {name!r}") from None
    # Grouped settings are namespaces; each load gets its own copy.
    cfg = SimpleNamespace(
        **{k: copy.deepcopy(v) for k, v in _cfg.__dict__.items() if not k.startswith("__")}
    )
    cfg.config_name = name
    return cfg


def _split(value: Any) -> list[str]:
    if isinstance(value, str):
        return [p.strip() for p in value.split(",") if p.strip()]
    return [str(p) for p in value]


def _flag(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"Expected a boolean, got {value!r}")


def _int(value: Any) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"Expected an integer, got {value!r}") from None


def _optional(value: Any) -> str | None:
    text = str(value).strip()
    return None if text.lower() in ("", "none") else text


def _set_sizes(cfg: Config, value: Any) -> None:
    cfg.rmatrix.sizes = [_int(v) for v in _split(value)]  # type: ignore


def _set_samples(cfg: Config, value: Any) -> None:
    cfg.rmatrix.sample_points = _int(value)  # type: ignore


def _set_oracle(cfg: Config, value: Any) -> None:
    cfg.oracle.enabled = _flag(value)  # type: ignore


def _set_no_oracle(cfg: Config, value: Any) -> None:
    if _flag(value):
        cfg.oracle.enabled = False  # type: ignore


def _set_timings(cfg: Config, value: Any) -> None:
    cfg.report.timings = _flag(value)  # type: ignore


# Keys shared by the command line (with "-" for "_") and configuration files.
_SETTERS: dict[str, Callable[[Config, Any], None]] = {
    "order": lambda cfg, v: setattr(cfg, "order", _int(v)),
    "depth": lambda cfg, v: setattr(cfg, "depth", _int(v)),
    "points": lambda cfg, v: setattr(cfg, "points", _split(v)),
    "suites": lambda cfg, v: setattr(cfg, "suites", _split(v)),
    "format": lambda cfg, v: setattr(cfg, "format", str(v).strip()),
    "mutate": lambda cfg, v: setattr(cfg, "mutate", _optional(v)),
    "seed": lambda cfg, v: setattr(cfg, "seed", _int(v)),
    "mode_bound": lambda cfg, v: setattr(cfg, "mode_bound", _int(v)),
    "sizes": _set_sizes,
    "sample_points": _set_samples,
    "oracle": _set_oracle,
    "no_oracle": _set_no_oracle,
    "timings": _set_timings,
    "verbose": lambda cfg, v: setattr(cfg, "verbose", _flag(v)),
}
CONFIG_KEYS = tuple(_SETTERS)


def configure_file(cfg: Config, path: Path | str) -> None:
    """
    Apply a key=value text file.

    Blank lines and lines starting with "#" are ignored; keys are the
    command-line flag names, written with "-" or "_".

    Raises:
        ConfigurationError: If the file is missing, a line is malformed or a key is unknown.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise ConfigurationError(f"Cannot read configuration file {path}: {e}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigurationError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key = key.strip().lstrip("-").replace("-", "_")
        if key not in _SETTERS:
            raise ConfigurationError(f"{path}:{lineno}: unknown key {key!r}")
        _SETTERS[key](cfg, value.strip())


def configure_args(cfg: Config, args: argparse.Namespace) -> None:
    """Apply the command-line flags that were given; unset flags are None."""
    for key, setter in _SETTERS.items():
        value = getattr(args, key, None)
        if value is not None:
            setter(cfg, value)


def configure_overrides(cfg: Config, overrides: dict[str, Any]) -> None:
    """
    Apply keyword overrides from the Python API.

    Raises:
        ConfigurationError: If a key is unknown.
    """
    for key, value in overrides.items():
        if key not in _SETTERS:
            raise ConfigurationError(f"Unknown setting {key!r}; known: {list(CONFIG_KEYS)}")
        _SETTERS[key](cfg, value)


def configure_defaults(cfg: Config) -> None:
    if getattr(cfg, "points", None) is None:
        cfg.points = [format_rational(rational(k) / 3) for k in range(cfg.depth)]  # type: ignore
    if getattr(cfg, "mutate", None) is None:
        cfg.mutate = None  # type: ignore
    if getattr(cfg, "verbose", None) is None:
        cfg.verbose = False  # type: ignore
    if not hasattr(cfg, "config_name"):
        cfg.config_name = "custom"  # type: ignore
