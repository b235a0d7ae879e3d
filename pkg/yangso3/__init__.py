from yangso3 import catalog, config, drinfeld, exact, gauss, rep, rmatrix, runner, utils
from yangso3._core import VerificationEngine, create_engine

__all__ = [
    "catalog",
    "config",
    "drinfeld",
    "exact",
    "gauss",
    "rep",
    "rmatrix",
    "runner",
    "utils",
    "create_engine",
    "VerificationEngine",
]

__version__ = "0.1.0"
