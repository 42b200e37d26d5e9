"""Exception hierarchy.

``InputRejected`` subclasses signal malformed input (CLI exit code 2).
``GeometryObstruction`` subclasses signal that a well-formed sextic falls
outside the range where the classification applies; the pipeline turns them
into an ``Undetermined`` verdict with the message as the reason.
"""

from __future__ import annotations


class SexticError(Exception):
    """Base class for all package errors."""


class InputRejected(SexticError, ValueError):
    """The input is not a valid sextic in P(1,1,2,2,3)."""


class ParseError(InputRejected):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.detail = message


class UnknownVariable(ParseError):
    pass


class NotHomogeneous(InputRejected):
    def __init__(self, message: str, offending: tuple = ()):
        super().__init__(message)
        self.offending = offending


class WrongDegree(NotHomogeneous):
    pass


class NotRational(InputRejected):
    """Coefficients must be rational numbers."""


class GeometryObstruction(SexticError):
    """The sextic is valid but outside the scope of the classification."""


class MissingX3Square(GeometryObstruction):
    """No ``x3^2`` term: the point (0,0,0,0,1) lies on X and is not terminal."""


class CubicVanishes(GeometryObstruction):
    """``F(0,0,x2,y2,0)`` is zero: the non-Gorenstein locus is a curve."""


class NotTerminalAtHalfPoint(GeometryObstruction):
    """Case Eq1 with all of the relevant forms zero (outside the table)."""


class NonIsolatedSingularLocus(GeometryObstruction):
    """The Gorenstein singular locus has a positive-dimensional component."""


class UnsupportedField(GeometryObstruction):
    """A construction would need a number field of degree above 3."""


class NotLinearizable(SexticError):
    """No linear-in-one-variable structure for a rationality witness."""


class PreconditionViolation(SexticError, ValueError):
    """An operation was called outside its documented domain."""
