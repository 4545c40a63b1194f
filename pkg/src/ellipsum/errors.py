"""Exception hierarchy shared by all modules."""


class EllipsumError(Exception):
    """Base class for every error raised by this package."""


class DomainError(EllipsumError, ValueError):
    """Argument outside the domain of the function."""


class PoleError(EllipsumError, ArithmeticError):
    """Evaluation too close to a pole.

    ``denominator`` carries the magnitude of the vanishing denominator.
    """

    def __init__(self, message, denominator=0.0):
        super().__init__(message)
        self.denominator = denominator


class ConvergenceError(EllipsumError, ArithmeticError):
    """Series did not reach the requested tolerance within the term cap."""

    def __init__(self, message, terms_used=0, tail_bound=float("inf")):
        super().__init__(message)
        self.terms_used = terms_used
        self.tail_bound = tail_bound


class ConsistencyError(EllipsumError):
    """Two routes to the same quantity disagree beyond tolerance."""


class ParseError(EllipsumError, ValueError):
    """Syntax error in a closed-form expression, with byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownSymbolError(ParseError):
    """Identifier that is not part of the expression grammar."""


class EvaluationError(EllipsumError, ArithmeticError):
    """Closed-form evaluation failed (division by zero, bad power, ...)."""


class MappingError(EllipsumError, ValueError):
    """A sum specification has no q-digamma counterpart."""


class CorpusFormatError(EllipsumError, ValueError):
    """Malformed corpus file; ``line`` is 1-based."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
