"""Split Bregman solvers for fourth-order total variation flows."""

from ._core import *  # noqa: F401,F403
from ._core import ConfigError, SolverError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
