"""Reproducing-kernel, Carleson-measure and corona computations."""

from ._core import *  # noqa: F401,F403
from ._core import CoronakitError, DomainError, InfeasibleError, NumericalError, ParameterError  # noqa: F401

__version__ = "0.1.0"
