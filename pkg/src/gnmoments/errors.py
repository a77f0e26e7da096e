"""Exception types raised by the library."""


class MomentError(Exception):
    """Base class for all library errors."""


class ImproperFunction(MomentError, ValueError):
    """The rational function grows at infinity (deg num > deg den)."""


class NonzeroConstantTerm(MomentError, ValueError):
    """The expansion at infinity has a nonzero constant term."""


class ZeroDenominator(MomentError, ZeroDivisionError):
    pass


class LengthMismatch(MomentError, ValueError):
    pass


class NotNormalizable(MomentError, ValueError):
    """The sequence vanishes where a leading nonzero moment is required."""


class NoNormalIndex(MomentError, ValueError):
    """All leading principal minors of the Hankel matrix vanish."""


class IndexOutOfRange(MomentError, IndexError):
    pass


class NotParametrized(MomentError, ValueError):
    """A parametrization matrix was requested outside the parametrized regime."""


class DegenerateTransform(MomentError, ValueError):
    """The denominator of a linear fractional transform vanishes identically."""
