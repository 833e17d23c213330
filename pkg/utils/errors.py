"""Error types shared by the graph algebra packages"""


class GraphAlgebraError(Exception):
    """Base class for every error raised by this project"""


class InputError(GraphAlgebraError, ValueError):
    """Malformed input: unknown vertex, foreign value, bad file, ..."""


class TermSyntaxError(InputError):
    """A term or formula could not be parsed.

    Args:
        message: What went wrong
        text: The text being parsed
        position: Zero-based character offset of the offending token
    """

    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class CapacityError(GraphAlgebraError):
    """An exhaustive search would exceed a configured guardrail"""


class ContractError(GraphAlgebraError):
    """An operation was called outside its precondition"""


class InternalError(GraphAlgebraError):
    """A result failed its own verification; indicates a bug"""
