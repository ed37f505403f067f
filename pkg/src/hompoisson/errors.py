"""Exception hierarchy.

Everything derives from :class:`HomPoissonError`; ``InputError`` subclasses
map to CLI exit status 2 and ``CapExceeded`` to exit status 3.
"""
from __future__ import annotations


class HomPoissonError(Exception):
    pass


class InputError(HomPoissonError):
    pass


class ShapeError(InputError, ValueError):
    """A tensor does not have the shape its role requires."""

    def __init__(self, message: str, tensor: str | None = None):
        super().__init__(message)
        self.tensor = tensor


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class SchemaMismatch(InputError):
    pass


class PartitionInvalid(InputError):
    pass


class FixtureInvalid(InputError):
    pass


class HypothesisViolated(HomPoissonError):
    """A constructor precondition failed; ``residual`` carries the witness."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class RNotAlphaInvariant(HypothesisViolated):
    pass


class InvalidBialgebra(HypothesisViolated):
    pass


class InvalidModule(HypothesisViolated):
    pass


class InvalidOOperator(HypothesisViolated):
    pass


class NotQuasitriangular(HypothesisViolated):
    pass


class CoalgebraMismatch(HypothesisViolated):
    pass


class CapExceeded(HomPoissonError):
    pass


class GridTooLarge(CapExceeded):
    pass
