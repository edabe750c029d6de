"""
Exceptions raised by the library. The CLI maps ``exit_code`` onto the
process exit status the way an HTTP layer maps errors onto status codes.
"""

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2

class GirthRootError(Exception):
    exit_code: int = EXIT_USAGE

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail

class GraphFormatError(GirthRootError):
    """Malformed edge list, JSON payload or role map."""

class DisconnectedGraphError(GirthRootError):
    pass

class TreeHasNoCoreError(GirthRootError):
    pass

class TailHypothesisError(GirthRootError):
    def __init__(self, detail: str, index: int) -> None:
        super().__init__(detail)
        self.index = index

class OracleLimitError(GirthRootError):
    pass

class InvalidColoringError(GirthRootError):
    pass

class CorruptRootError(GirthRootError):
    pass

class SolverInvariantError(GirthRootError):
    """A constructed answer failed its own verification."""

class GenerationError(GirthRootError):
    pass

class UsageError(GirthRootError):
    pass
