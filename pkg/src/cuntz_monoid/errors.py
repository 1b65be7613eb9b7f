"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for domain errors (a law or precondition was violated)."""


class AlphabetMismatch(AlgebraError):
    pass


class PreconditionError(AlgebraError):
    pass


class ResourceLimit(AlgebraError):
    pass


class Incompatible(AlgebraError):
    pass


class NotInjective(AlgebraError):
    pass


class NoCaret(AlgebraError):
    pass


class NotIdempotent(AlgebraError):
    pass


class NotComposable(AlgebraError):
    pass


class NotAUnit(AlgebraError):
    pass


class ParseError(ValueError):
    pass
