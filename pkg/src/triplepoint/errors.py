"""Exception types shared across the package."""


class TriplepointError(Exception):
    """Base class for all package errors."""


class RingMismatchError(TriplepointError):
    """Operands live in different ring contexts."""


class ZeroPolynomialError(TriplepointError):
    """Operation undefined for the zero polynomial."""


class ParseError(TriplepointError):
    """Malformed polynomial, tag, or graph input."""


class ParameterError(TriplepointError):
    """Family parameters outside the catalog's allowed range."""


class UnsupportedTypeError(TriplepointError):
    """Operation not defined for this presentation (e.g. trace for CM type != 2)."""


class ColengthBudgetError(TriplepointError):
    """Local length did not stabilize within the truncation budget."""


class SearchFailureError(TriplepointError):
    """A bounded search (reduction of the maximal ideal) was exhausted."""


class ShapeError(TriplepointError):
    """A computed object does not have the shape an operation requires."""


class GraphInvariantError(TriplepointError):
    """A dual graph violates a structural invariant (e.g. negative definiteness)."""
