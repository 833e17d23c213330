"""Status output for the command line and the membership pipeline.

Everything goes to stderr so that stdout carries only results.
"""
import sys

_quiet = False


def set_quiet(quiet: bool) -> None:
    global _quiet
    _quiet = quiet


def status(message: str) -> None:
    """Print a status line unless quiet mode is on"""
    if not _quiet:
        print(message, file=sys.stderr)


def section(title: str) -> None:
    """Print a section banner framed by rules"""
    status("\n" + "=" * 60)
    status(title)
    status("=" * 60)


def warn(message: str) -> None:
    """Warnings are shown even in quiet mode"""
    print(f"⚠️  {message}", file=sys.stderr)
