from yangso3._settings._config import (
    CONFIG_KEYS,
    Config,
    ConfigurationError,
    configure_args,
    configure_defaults,
    configure_file,
    configure_overrides,
    load_config,
)
from yangso3._settings._mutation import MUTATION_TARGETS, Mutation
from yangso3._settings._run_config import SUITE_ORDER, RunConfig, build_run_config, resolve_suites

__all__ = [
    "CONFIG_KEYS",
    "Config",
    "ConfigurationError",
    "MUTATION_TARGETS",
    "Mutation",
    "RunConfig",
    "SUITE_ORDER",
    "build_run_config",
    "configure_args",
    "configure_defaults",
    "configure_file",
    "configure_overrides",
    "load_config",
    "resolve_suites",
]
