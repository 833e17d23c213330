"""Outcome of a command: verdict, payload and exit code"""
from dataclasses import dataclass, field
from typing import Any

from utils.errors import CapacityError, GraphAlgebraError

EXIT_AFFIRMATIVE = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

AFFIRMATIVE = {"holds", "member", "ok"}
NEGATIVE = {"violated", "non-member"}


@dataclass
class CommandResult:
    """verdict is one of holds, violated, member, non-member or ok (a plain
    output command); text is what goes to stdout"""
    verdict: str
    text: str = ""
    payload: dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if self.verdict in AFFIRMATIVE:
            return EXIT_AFFIRMATIVE
        if self.verdict in NEGATIVE:
            return EXIT_NEGATIVE
        raise ValueError(f"unknown verdict {self.verdict!r}")


def exit_code_for(error: GraphAlgebraError) -> int:
    """Capacity errors exit 3; input, contract and internal errors exit 2"""
    return EXIT_CAPACITY if isinstance(error, CapacityError) else EXIT_INPUT
