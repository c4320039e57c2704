"""Exception hierarchy shared by every ptabkit module."""


class PtabError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class InvalidPtableau(PtabError, ValueError):
    """A raw grid breaks one of the ptableau rules.

    ``coords`` is the 1-based ``(row, col)`` of the offending box.
    """

    def __init__(self, message, coords=None):
        if coords is not None:
            message = f"{message} at (row {coords[0]}, col {coords[1]})"
        super().__init__(message)
        self.coords = coords


class RowOrderViolation(InvalidPtableau):
    pass


class ColumnStrictnessViolation(InvalidPtableau):
    pass


class StripOrderViolation(InvalidPtableau):
    pass


class InvalidExtension(PtabError):
    pass


class IndexOutOfRange(PtabError, IndexError):
    pass


class InternalInconsistency(PtabError, AssertionError):
    """Raised when an internal invariant fails; always a bug."""


class StandardFormBroken(InternalInconsistency):
    pass


class InvalidResult(InternalInconsistency):
    pass


class MethodDisagreement(InternalInconsistency):
    pass


class NullStep(PtabError):
    """An operator in a sequence returned NULL."""

    def __init__(self, message, step_index=None, step=None):
        super().__init__(message)
        self.step_index = step_index
        self.step = step


class ContentExceedsAlphabet(PtabError):
    pass


class WordConditionPrecondition(PtabError):
    pass


class NotHighestWeight(PtabError):
    pass


class ShapeMismatch(PtabError):
    pass


class MalformedInput(PtabError):
    pass


class LimitExceeded(PtabError):
    """Exploration hit its node limit; ``partial`` holds what was found."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(ValueError):
    """Text input could not be parsed (CLI exit code 2)."""

    def __init__(self, message, line=None, col=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        super().__init__(where + message)
        self.bare = message
        self.line = line
        self.col = col
