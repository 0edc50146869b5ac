"""Exception hierarchy.

Checkers never raise for a failed law; they return a :class:`~liftlaw.report.Report`.
Exceptions are reserved for calls whose preconditions cannot be met.
"""


class LiftlawError(Exception):
    """Base class for all library errors."""


class CompositionUndefined(LiftlawError):
    pass


class UnknownObject(LiftlawError):
    pass


class IncompatibleFunctors(LiftlawError):
    pass


class MissingMorphism(LiftlawError):
    """A structure needs a morphism whose hom-set is empty."""


class LawInvalid(LiftlawError):
    pass


class CapExceeded(LiftlawError):
    pass


class DeclarationError(LiftlawError):
    """Malformed declaration file or unresolved reference."""
