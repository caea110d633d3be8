"""Exact equivariant K-theory of smooth toric varieties.

Two presentations of the same ring are implemented and cross-checked:
compatible tuples of representation-ring elements (:mod:`piecewise`) and
the multiplicative Stanley-Reisner quotient (:mod:`stanley_reisner`).
"""

from .errors import (
    ContractViolation,
    IncompatibleElementError,
    InvalidFanError,
    NotInIdealError,
    ResourceLimitError,
    ToricKtError,
)
from .fan import Fan, validate
from .laurent import LaurentPoly, UnitEndedPoly
from .piecewise import PiecewiseElement

__all__ = [
    "ContractViolation",
    "Fan",
    "IncompatibleElementError",
    "InvalidFanError",
    "LaurentPoly",
    "NotInIdealError",
    "PiecewiseElement",
    "ResourceLimitError",
    "ToricKtError",
    "UnitEndedPoly",
    "validate",
]

__version__ = "0.1.0"
