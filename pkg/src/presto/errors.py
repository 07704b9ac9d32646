"""Exception hierarchy.

Errors are grouped so the command-line front end can map each family to its
own exit code: ingestion problems, invalid arguments, and runtime failures.
"""


class PrestoError(Exception):
    """Base class for every error raised by this package."""


# -- motif / model -----------------------------------------------------------

class MotifError(PrestoError, ValueError):
    """A motif description violates the motif invariants."""


class EmptyMotif(MotifError):
    pass


class SelfLoopEdge(MotifError):
    pass


class DisconnectedMotif(MotifError):
    pass


class NetworkTooSmall(PrestoError, ValueError):
    """The network has too few edges for the requested computation."""


# -- ingestion ---------------------------------------------------------------

class IngestError(PrestoError):
    """Base class for errors raised while reading input files."""


class MalformedLine(IngestError, ValueError):
    def __init__(self, line_no, reason=""):
        self.line_no = line_no
        self.reason = reason
        msg = f"malformed line {line_no}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class EmptyNetwork(IngestError, ValueError):
    pass


# -- sampling / counting -----------------------------------------------------

class InvalidConfig(PrestoError, ValueError):
    pass


class DegenerateInterval(PrestoError, ValueError):
    """The window-start interval is empty."""


class ZeroCaptureProbability(PrestoError, ArithmeticError):
    """An instance was found that no window start can capture."""


class CountOverflow(PrestoError, OverflowError):
    pass


# -- bounds ------------------------------------------------------------------

class InvalidGoal(PrestoError, ValueError):
    pass


class InfeasibleBudget(PrestoError, ValueError):
    """A sample size exceeds 2**53 and cannot be represented exactly."""
