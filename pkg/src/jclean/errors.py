"""Exception hierarchy shared by every module of the package."""


class JCleanError(Exception):
    """Base class for all library errors."""


class ParseError(JCleanError, ValueError):
    """Malformed ring spec, element literal, polynomial or matrix text."""


class RingMismatch(JCleanError, ValueError):
    """Operands live in different rings (or matrices of different sizes)."""


class NotAUnit(JCleanError, ArithmeticError):
    pass


class NotComaximal(JCleanError):
    """A Bezout identity was requested for a pair that is not comaximal."""


class NotClean(JCleanError):
    """Certified: the matrix is not strongly J#-clean."""


class NoFactorization(NotClean):
    """Certified: no splitting h = h0*h1 with h0 in class 0 and h1 in class 1."""


class Unsupported(JCleanError):
    """No complete decision procedure is available for this input."""


class BudgetExceeded(JCleanError):
    """An exhaustive enumeration would exceed the configured size budget."""
