"""Exception types raised across the engine."""


class HochsmashError(Exception):
    """Base class for all engine errors."""


class CyclotomicOrderError(HochsmashError, ValueError):
    """Arithmetic between cyclotomic numbers of different orders."""


class LiteralParseError(HochsmashError, ValueError):
    """A cyclotomic literal string could not be parsed."""


class NotRational(HochsmashError, ArithmeticError):
    """A cyclotomic number expected to be rational has an irrational part."""


class PoleError(HochsmashError, ArithmeticError):
    """A Laurent expansion was requested below the order of the pole at 0."""


class NotInvariant(HochsmashError, ArithmeticError):
    """A subspace is not stable under the operator being restricted to it."""


class OrderExceeded(HochsmashError):
    """Group closure grew past the configured maximum order."""


class NonInvertibleGenerator(HochsmashError, ValueError):
    """A group generator has zero determinant."""


class NegativeDimension(HochsmashError, ArithmeticError):
    """A computed graded dimension is negative or not an integer."""


class NonIntegralInvariantDim(HochsmashError, ArithmeticError):
    """A Reynolds trace average did not come out as a nonnegative integer."""


class NotInCentralizer(HochsmashError, ValueError):
    """An element passed as centralizing does not commute with the class rep."""


class SlotTooLarge(HochsmashError):
    """A bar complex slot exceeds the configured size cap."""

    def __init__(self, n, degree, size, cap):
        super().__init__(
            f"bar complex slot (n={n}, D={degree}) has dimension {size} > cap {cap}"
        )
        self.n = n
        self.degree = degree
        self.size = size
        self.cap = cap


class GroupFileError(HochsmashError, ValueError):
    """A group file is malformed or violates its schema."""
