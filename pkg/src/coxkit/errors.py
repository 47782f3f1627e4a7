"""Exception types shared across the package."""


class CoxeterError(Exception):
    """Base class for every error raised by this package."""


class BadRank(CoxeterError):
    """Rank is not a positive integer, or the matrix shape disagrees with it."""


class BadDiagonal(CoxeterError):
    """A diagonal matrix entry differs from 1."""


class BadOffDiagonal(CoxeterError):
    """An off-diagonal matrix entry is not an integer >= 2 (or infinity)."""


class NonSymmetric(CoxeterError):
    """The matrix is not symmetric."""


class LetterOutOfRange(CoxeterError):
    """A word contains a letter that is not a generator index of the system."""


class NotReduced(CoxeterError):
    """A word that was required to be reduced can be shortened."""


class BudgetExceeded(CoxeterError):
    """Base class for configurable enumeration caps.

    Raised instead of silently truncating: a capped search could
    otherwise return wrong canonical forms or incomplete posets.
    """


class OrbitBudgetExceeded(BudgetExceeded):
    """The braid-move closure of a word grew past the configured cap."""


class BallBudgetExceeded(BudgetExceeded):
    """A length-bounded group enumeration grew past the configured cap."""


class NotComparable(CoxeterError):
    """An interval [x, y] was requested for incomparable x, y."""


class TopOutOfBall(CoxeterError):
    """An interval top is longer than the ball bound, so the interval
    could be incomplete; the request is refused rather than truncated."""


class RepNotMinimal(CoxeterError):
    """A coset representative is not the minimal-length member of its coset."""
