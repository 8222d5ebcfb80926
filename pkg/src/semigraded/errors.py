"""Exception hierarchy.

Every error carries a short machine-readable ``code`` (``MIXED_FIELDS``,
``SYNTAX_ERROR`` ...) so that the command line layer can report it without
string matching.
"""


class SemigradedError(Exception):
    code = "ERROR"

    def __init__(self, message="", code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class MixedFieldsError(SemigradedError, TypeError):
    code = "MIXED_FIELDS"


class FieldDivisionError(SemigradedError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class ZeroInputError(SemigradedError, ValueError):
    code = "ZERO_INPUT"


class AmbientMismatchError(SemigradedError, ValueError):
    code = "AMBIENT_MISMATCH"


class PresentationError(SemigradedError, ValueError):
    """Problem with a presentation text or a presentation object.

    ``line`` and ``col`` are 1-based and only set for syntax problems.
    """

    code = "SYNTAX_ERROR"

    def __init__(self, message="", code=None, line=None, col=None):
        super().__init__(message, code)
        self.line = line
        self.col = col

    def __str__(self):
        base = super().__str__()
        if self.line is not None:
            where = f"line {self.line}" + (f", col {self.col}" if self.col is not None else "")
            return f"{base} ({where})"
        return base


class AlgebraError(SemigradedError, ValueError):
    """Errors raised by operations on elements, slices and fractions."""
