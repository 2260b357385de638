"""Exception types raised by hyperlap."""


class HyperlapError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(HyperlapError, ValueError):
    """A hypergraph description violates a structural invariant."""


class EmptyInputSet(ValidationError):
    pass


class EmptyOutputSet(ValidationError):
    pass


class UnknownVertex(ValidationError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownHyperedge(ValidationError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DuplicateId(ValidationError):
    pass


class NoHyperedges(HyperlapError, ValueError):
    pass


class EmptySubset(HyperlapError, ValueError):
    pass


class TooManyHyperedges(HyperlapError, ValueError):
    """Closed-system enumeration refused because M exceeds the cap."""


class InfeasibleFamily(HyperlapError, ValueError):
    pass


class DimensionMismatch(HyperlapError, ValueError):
    pass


class ZeroFunction(HyperlapError, ValueError):
    pass


class DocumentSyntaxError(HyperlapError, ValueError):
    """Malformed JSON document; carries the line and column of the fault."""

    def __init__(self, msg, line=None, column=None):
        super().__init__(msg)
        self.line = line
        self.column = column


class NumericError(HyperlapError, ArithmeticError):
    """Base class for eigensolver failures."""


class NotSymmetric(NumericError):
    pass


class NoConvergence(NumericError):
    pass


class MultiplicityMismatch(NumericError):
    """Floating-point zero count disagrees with the exact kernel dimension."""
