"""Monte Carlo estimators for SINR connectivity in Poisson networks."""

from ._sinrmc import *  # noqa: F401,F403
from ._sinrmc import (
    ModelParams,
    NoHitsError,
    ParameterError,
    ParseError,
    SolverError,
    WeightError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
