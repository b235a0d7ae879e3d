from __future__ import annotations

from typing import Any

from yangso3._core.engine import VerificationEngine
from yangso3._settings import build_run_config, configure_defaults, configure_overrides, load_config


def create_engine(config: str = "default", **overrides: Any) -> VerificationEngine:
    """
    Create a verification engine from a named configuration.

    Args:
        config (str):
            The configuration module to load from `yangso3.config`. Defaults to "default".
        **overrides (Any):
            Settings replacing the module's, under the command-line key names
            (e.g. `order=4`, `points="0,1/3"`, `suites=["rtt"]`).

    Returns:
        VerificationEngine: An engine bound to the validated configuration.

    Raises:
        ConfigurationError: If the configuration is unknown or invalid.

    Notes:
        - The configuration is dynamically loaded from `yangso3.config`.
        - Nothing is computed until `VerificationEngine.run` is called.
    """
    cfg = load_config(config)
    configure_overrides(cfg, overrides)
    configure_defaults(cfg)
    return VerificationEngine(build_run_config(cfg))
