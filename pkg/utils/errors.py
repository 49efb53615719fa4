# utils/errors.py

from __future__ import annotations

from pathlib import Path


class SublabError(Exception):
    """
    Base class for every error raised by the library.
    Concrete errors also derive from the closest builtin so callers
    can catch either one.
    """


class DegreeError(SublabError, ValueError):
    """Permutations (or a permutation and a group) act on different point counts."""


class FormatError(SublabError, ValueError):
    """
    Malformed permutation, generator list or group file.
    `line` is the 1-based line number when the text came from a file.
    """

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(SublabError, RuntimeError):
    """A desk-scale cap (element enumeration, lattice, quotient degree...) was exceeded."""


class MembershipError(SublabError, ValueError):
    """An element or subgroup is not contained where it has to be."""


class NormalityError(SublabError, ValueError):
    """Quotient requested by a subgroup that is not normal."""


class ArgumentError(SublabError, ValueError):
    """Precondition on arguments violated (non-prime p, bad t, unknown suite...)."""


class ReportWriteError(SublabError, OSError):
    def __init__(self, path: str | Path, reason: str) -> None:
        self.path = Path(path)
        super().__init__(f"cannot write report to {self.path}: {reason}")
