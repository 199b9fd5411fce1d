"""
Shared logger and error hierarchy for every catv subpackage.

Checks that can fail mathematically return a ``Report``; the exceptions below
are raised only when an input is malformed or a precondition does not hold.
"""

import logging
from typing import Any, Optional

logger = logging.getLogger("catv")

# Grammar construction in lark is chatty at DEBUG
logging.getLogger("lark").setLevel(logging.WARNING)


class CatvError(Exception):
    """Base exception for catv errors."""
    pass


class StructuralError(CatvError):
    """Malformed input: bad index, non-composable pair, non-closed subcategory."""
    pass


class SizeCapError(StructuralError):
    """A materialisation would exceed the configured size cap."""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what} would have {count} elements, cap is {cap}")
        self.what = what
        self.count = count
        self.cap = cap


class ConfigError(CatvError):
    """Invalid configuration value."""
    pass


class PreconditionError(CatvError):
    """A mathematical precondition of an operation does not hold."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class VarianceError(PreconditionError):
    """(E, M) is not a variance."""

    def __init__(self, message: str, report: Optional[Any] = None):
        witness = report.violations[0].witness if report is not None and report.violations else None
        super().__init__(message, witness)
        self.report = report


class CompatibilityError(PreconditionError):
    """A pair of functors fails the compatibility square."""
    pass


class InheritanceError(PreconditionError):
    """Subcategory is not closed under factoring."""
    pass


class NotInvertibleError(PreconditionError):
    """A contravariant image has no inverse in the target."""
    pass


class NotNaturalError(PreconditionError):
    """Family fails the heuristic naturality condition."""
    pass


class NotASectionError(PreconditionError):
    """Functor is not a section of the forgetful functor."""
    pass


class LiftError(PreconditionError):
    """Componentwise lifting precondition fails."""
    pass


class DSLError(CatvError):
    """Diagnostic raised while reading a .catv workspace."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = f"{line}:{column}" if line else "?:?"
        if source:
            where = f"{source}:{where}"
        super().__init__(f"{where}: {message}")


class DSLSyntaxError(DSLError):
    """Text does not match the .catv grammar."""
    pass


class DSLSemanticError(DSLError):
    """Declaration parses but refers to something that does not resolve."""
    pass


def exit_code_for(error: BaseException) -> int:
    """Map an exception onto the CLI exit-code contract (2 for input problems)."""
    if isinstance(error, (DSLError, StructuralError, ConfigError, PreconditionError)):
        return 2
    return 1
