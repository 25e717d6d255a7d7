"""Exception hierarchy shared by every module.

The CLI maps these onto exit statuses: input problems exit 2, graphs outside
the supported class exit 1, broken structural guarantees exit 3.
"""


class NNOError(Exception):
    """Base class for all toolkit errors."""


class GraphFormatError(NNOError, ValueError):
    """Malformed graph text, loops, duplicate edges or bad vertex indices."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(NNOError, ValueError):
    pass


class NotInClassError(NNOError):
    """The graph is not a connected P5-free chordal bipartite graph."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class TheoryViolation(NNOError):
    """A structural guarantee failed on an input that passed recognition.

    Raised instead of returning an unverified answer; every occurrence is a
    counterexample worth archiving.
    """


class DecompositionFailure(TheoryViolation):
    pass


class ConstructionInvalid(TheoryViolation):
    pass


class AttachmentFailure(TheoryViolation):
    pass


class SizeGuardError(NNOError, ValueError):
    """Input too large for an exponential-time oracle."""


class OracleTimeout(NNOError):
    pass


class TerminalError(NNOError, ValueError):
    """Steiner terminal set is empty or names vertices outside the graph."""
