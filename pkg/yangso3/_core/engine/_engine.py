from __future__ import annotations

from dataclasses import replace

from yangso3._settings import RunConfig, resolve_suites
from yangso3.catalog import format_catalog
from yangso3.runner import SuiteContext, VerificationReport, run


class VerificationEngine:
    """
    Runs verification suites for one validated configuration.

    The representation and its Gauss decomposition are built once and shared
    by every later `run` call on the same engine.
    """

    def __init__(self, config: RunConfig):
        self._config = config
        self._context = SuiteContext(config)

    @property
    def config(self) -> RunConfig:
        return self._config

    @property
    def context(self) -> SuiteContext:
        return self._context

    def run(self, suites: list[str] | None = None) -> VerificationReport:
        """
        Run the configured suites, or the given ones.

        Args:
            suites (list[str] | None):
                Suite names ("all" allowed). Defaults to the configured suites.

        Returns:
            VerificationReport: The sorted records.

        Raises:
            ConfigurationError: If a suite name is unknown.
        """
        config = self._config if suites is None else replace(self._config, suites=resolve_suites(suites))
        return run(config, self._context)

    def catalog(self) -> str:
        return format_catalog()

    def __repr__(self) -> str:
        return f"VerificationEngine({self._config.label}, suites={list(self._config.suites)})"
