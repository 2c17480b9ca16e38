"""Exception taxonomy shared across the toolkit.

Three failure classes matter to callers: bad parameters or malformed inputs
(ParameterError / PreconditionError), inputs that exceed the configured
exact-search limits (SizeLimitError), and witnesses that fail verification
(WitnessError). The CLI maps the first two to exit code 2 and keeps exit
code 1 for genuine property violations found by the verification suite.
"""


class ParameterError(ValueError):
    """A parameter is outside its documented domain (e.g. r = 0)."""


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold for this input.

    The message names the failed clause so harness reports stay readable.
    """


class SizeLimitError(RuntimeError):
    """Input exceeds the exact-search size limit for this operation."""


class WitnessError(ValueError):
    """A supplied witness object fails its own validity clauses."""


class FormatError(ValueError):
    """Malformed serialized input; carries a byte/line offset when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset
