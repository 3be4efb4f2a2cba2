"""Exception types raised by qdistinguish."""


class QdistError(Exception):
    """Base class for all library errors."""


class NonHermitianInput(QdistError, ValueError):
    pass


class NumericalFailure(QdistError, ArithmeticError):
    pass


class NegativeEigenvalue(QdistError, ValueError):
    pass


class InvalidExponent(QdistError, ValueError):
    pass


class NotPositive(QdistError, ValueError):
    pass


class TraceNotOne(QdistError, ValueError):
    pass


class InvalidPrior(QdistError, ValueError):
    pass


class ParamOutOfRange(QdistError, ValueError):
    pass


class InvalidRank(QdistError, ValueError):
    pass


class NonSquare(QdistError, ValueError):
    pass


class DomainError(QdistError, ValueError):
    pass


class DomainMismatch(QdistError, ValueError):
    pass


class ParseError(QdistError, ValueError):
    """Malformed matrix file.

    ``line`` and ``column`` are 1-based positions in the source text when the
    failure is syntactic; for structural problems ``position`` names the
    offending ``rows[i][j]`` entry instead.
    """

    def __init__(self, message, *, line=None, column=None, position=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if position is not None:
            where.append(position)
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.column = column
        self.position = position


class EqualityViolation(QdistError, AssertionError):
    """A bound expected to be tight on an equality family is not."""

    def __init__(self, bound_id, family, t, slack):
        super().__init__(
            f"bound {bound_id} is not tight on family ({family}) at t={t}: slack={slack:.3e}"
        )
        self.bound_id = bound_id
        self.family = family
        self.t = t
        self.slack = slack
