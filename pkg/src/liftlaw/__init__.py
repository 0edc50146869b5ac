"""Finite verification of distributive laws between a monoidal action and a monad.

The finite side works with tabulated categories; the linear side with exact
matrices over prime fields or the rationals.
"""
from .errors import (
    CapExceeded,
    CompositionUndefined,
    DeclarationError,
    IncompatibleFunctors,
    LawInvalid,
    LiftlawError,
    MissingMorphism,
    UnknownObject,
)
from .report import Report, Violation

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CompositionUndefined",
    "DeclarationError",
    "IncompatibleFunctors",
    "LawInvalid",
    "LiftlawError",
    "MissingMorphism",
    "Report",
    "UnknownObject",
    "Violation",
]
