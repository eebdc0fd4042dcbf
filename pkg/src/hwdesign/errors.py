"""Exception hierarchy shared by the builders, verifier and CLI."""

from __future__ import annotations


class DesignError(Exception):
    """Base class; ``code`` is a short machine-readable tag."""

    code = "ERROR"

    def __init__(self, message: str = "", code: str | None = None):
        super().__init__(message or self.code)
        if code is not None:
            self.code = code


class Rejected(DesignError):
    """Input violates a precondition (REJECT_HOST, REJECT_PARAMS, ...)."""

    code = "REJECT"


class Unsupported(Rejected):
    code = "UNSUPPORTED"


class Classified(DesignError):
    """Not a failure of the code: the requested object is classified, not built."""

    classification = "CLASSIFIED"

    def __init__(self, message: str = "", citation: str = ""):
        super().__init__(message or self.classification)
        self.citation = citation


class Nonexistent(Classified):
    classification = code = "NONEXISTENT"


class OpenCase(Classified):
    classification = code = "OPEN"


class NecessaryFail(Classified):
    classification = code = "NECESSARY_FAIL"


class MissingIngredient(Classified):
    classification = code = "MISSING_INGREDIENT"

    def __init__(self, missing: list[str], citation: str = ""):
        super().__init__("missing ingredient(s): " + ", ".join(missing), citation)
        self.missing = list(missing)


class NotFound(Classified):
    """Bounded search exhausted its budget."""

    classification = code = "NOT_FOUND"


class ParseError(DesignError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
