"""Command handlers behind main.py"""

from commands.result import CommandResult, exit_code_for
from commands.term_cmd import run_term
from commands.check_cmd import run_check
from commands.member_cmd import run_member
from commands.encode_cmd import run_encode

__all__ = [
    'CommandResult',
    'exit_code_for',
    'run_check',
    'run_encode',
    'run_member',
    'run_term',
]
