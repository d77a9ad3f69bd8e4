"""Exception types shared across the package.

Everything user-facing derives from PolyadjError so the CLI can map
failures to stable exit codes. ValueError subclasses mark bad input,
InternalInconsistencyError marks a failed internal cross-check (a bug).
"""


class PolyadjError(Exception):
    pass


class ZeroVectorError(PolyadjError, ValueError):
    pass


class DimensionMismatchError(PolyadjError, ValueError):
    pass


class EmptyPolytopeError(PolyadjError, ValueError):
    pass


class UnboundedPolytopeError(PolyadjError, ValueError):
    pass


class LowerDimensionalError(PolyadjError, ValueError):
    pass


class NotLatticePolytopeError(PolyadjError, ValueError):
    pass


class NonUnimodularError(PolyadjError, ValueError):
    pass


class InvalidConeError(PolyadjError, ValueError):
    pass


class NotInConeError(PolyadjError, ValueError):
    pass


class InvalidConfigError(PolyadjError, ValueError):
    pass


class ParseError(PolyadjError, ValueError):
    pass


class InternalInconsistencyError(PolyadjError, RuntimeError):
    """An exact cross-check that should always hold has failed."""
