from __future__ import annotations

from dataclasses import dataclass

from yangso3._settings._config import Config, ConfigurationError
from yangso3._settings._mutation import Mutation
from yangso3.exact import Rational, format_rational, parse_rational

SUITE_ORDER = ("rmatrix", "rtt", "unitarity", "gauss", "relations", "drinfeld", "roundtrip")
SUITE_ALIASES = {"section3": "relations"}
FORMATS = ("json", "text")


@dataclass(frozen=True)
class RunConfig:
    """
    Validated parameters of one verification run.

    Attributes:
        order (int): Truncation order K.
        depth (int): Number m of evaluation factors.
        points (tuple[Rational, ...]): Evaluation points, one per factor.
        suites (tuple[str, ...]): Selected suites in execution order.
        format (str): "json" or "text".
        mutate (Mutation | None): Negative-control perturbation.
        seed (int): Seed of the sampled Yang-Baxter points.
        mode_bound (int): Largest mode index in the mode relations.
        sizes (tuple[int, ...]): Values of N for the R-matrix suite.
        sample_points (int): Number of sampled Yang-Baxter points per N.
        oracle (bool): Confirm two-variable identities with the expansion path.
        timings (bool): Record elapsed milliseconds.
        verbose (bool): Progress on standard error.
    """

    order: int = 8
    depth: int = 2
    points: tuple[Rational, ...] = ()
    suites: tuple[str, ...] = SUITE_ORDER
    format: str = "json"
    mutate: Mutation | None = None
    seed: int = 0
    mode_bound: int = 6
    sizes: tuple[int, ...] = (3, 4, 5)
    sample_points: int = 5
    oracle: bool = True
    timings: bool = False
    verbose: bool = False

    def as_dict(self) -> dict[str, object]:
        """Flat, JSON-ready view used in report headers."""
        return {
            "order": self.order,
            "depth": self.depth,
            "points": [format_rational(a) for a in self.points],
            "suites": list(self.suites),
            "mutate": None if self.mutate is None else str(self.mutate),
            "seed": self.seed,
            "mode_bound": self.mode_bound,
            "sizes": list(self.sizes),
            "sample_points": self.sample_points,
            "oracle": self.oracle,
        }

    @property
    def label(self) -> str:
        """Parameter label carried by every representation-level record."""
        return f"K={self.order} m={self.depth} a={','.join(format_rational(a) for a in self.points)}"


def resolve_suites(names: list[str]) -> tuple[str, ...]:
    """
    Expand "all", map aliases and order the suites canonically.

    Raises:
        ConfigurationError: If a name is not a suite.
    """
    chosen: set[str] = set()
    for name in names:
        name = SUITE_ALIASES.get(name, name)
        if name == "all":
            chosen.update(SUITE_ORDER)
        elif name in SUITE_ORDER:
            chosen.add(name)
        else:
            raise ConfigurationError(f"Unknown suite {name!r}; choose from {[*SUITE_ORDER, 'all']}")
    if not chosen:
        raise ConfigurationError("No suite selected")
    return tuple(s for s in SUITE_ORDER if s in chosen)


def _mutation(text: str, order: int, sizes: tuple[int, ...], suites: tuple[str, ...]) -> Mutation:
    try:
        m = Mutation.parse(text)
    except ValueError as e:
        raise ConfigurationError(str(e)) from None
    if m.suite not in suites:
        raise ConfigurationError(f"Mutation targets suite {m.suite!r}, which is not selected")
    if m.target in ("P", "Q"):
        n = sizes[0]
        if m.index >= n**4:
            raise ConfigurationError(f"Mutation entry {m.index} out of range for N={n}")
    elif m.index > order:
        raise ConfigurationError(f"Mutation exponent {m.index} beyond the truncation order {order}")
    return m


def build_run_config(cfg: Config) -> RunConfig:
    """
    Validate a configuration namespace and freeze it.

    Args:
        cfg (SimpleNamespace | ModuleType): Loaded and overridden settings.

    Returns:
        RunConfig: The validated run parameters.

    Raises:
        ConfigurationError: If any parameter is out of range or malformed.
    """
    order, depth = int(cfg.order), int(cfg.depth)
    if order < 2:
        raise ConfigurationError(f"Truncation order must be at least 2, got {order}")
    if depth < 1:
        raise ConfigurationError(f"Depth must be at least 1, got {depth}")
    try:
        points = tuple(parse_rational(str(p)) for p in cfg.points)
    except ValueError as e:
        raise ConfigurationError(str(e)) from None
    if len(points) != depth:
        raise ConfigurationError(f"Depth {depth} needs {depth} evaluation points, got {len(points)}")
    suites = resolve_suites(list(cfg.suites))
    if cfg.format not in FORMATS:
        raise ConfigurationError(f"Unknown report format {cfg.format!r}; choose from {list(FORMATS)}")
    sizes = tuple(int(n) for n in cfg.rmatrix.sizes)
    if not sizes or min(sizes) < 3:
        raise ConfigurationError(f"R-matrix sizes must be at least 3, got {list(sizes)}")
    samples = int(cfg.rmatrix.sample_points)
    if samples < 0:
        raise ConfigurationError(f"Sample point count must be non-negative, got {samples}")
    mode_bound = int(cfg.mode_bound)
    if "drinfeld" in suites and not 0 <= mode_bound <= order - 2:
        raise ConfigurationError(f"Mode bound {mode_bound} needs order at least {mode_bound + 2}, got {order}")
    mutate = None if cfg.mutate is None else _mutation(str(cfg.mutate), order, sizes, suites)
    return RunConfig(
        order=order,
        depth=depth,
        points=points,
        suites=suites,
        format=cfg.format,
        mutate=mutate,
        seed=int(cfg.seed),
        mode_bound=mode_bound,
        sizes=sizes,
        sample_points=samples,
        oracle=bool(cfg.oracle.enabled),
        timings=bool(cfg.report.timings),
        verbose=bool(cfg.verbose),
    )
