"""Exception hierarchy shared by all qpoints modules."""
from __future__ import annotations


class QPointsError(Exception):
    """Base class for every domain error raised by qpoints."""


class ZeroScalar(QPointsError, ValueError):
    """A zero value was supplied where a unit (nonzero scalar) is required."""


class ParseError(QPointsError):
    """Malformed scalar expression or matrix document.

    ``pos`` is a 0-based character offset into the parsed text, ``line`` a
    1-based line number when parsing a matrix document.
    """

    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.message = message
        self.pos = pos
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"column {pos + 1}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class InvalidMatrix(QPointsError, ValueError):
    """A parameter matrix violates unit diagonal or reciprocity."""


class MissingEntry(InvalidMatrix):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"missing entry q {i} {j}")


class DuplicateEntry(InvalidMatrix):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"duplicate entry q {i} {j}")


class IndexOutOfRange(QPointsError, IndexError):
    pass


class CannotDeleteLast(QPointsError, ValueError):
    pass


class IndicesNotDistinct(QPointsError, ValueError):
    pass


class EmptySubset(QPointsError, ValueError):
    pass


class LengthMismatch(QPointsError, ValueError):
    pass


class TooLarge(QPointsError, ValueError):
    pass


class ComponentLimitExceeded(QPointsError, RuntimeError):
    pass


class InvalidPoint(QPointsError, ValueError):
    """A projective point with every coordinate zero."""
