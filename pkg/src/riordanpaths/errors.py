"""Exception hierarchy shared by every module in the package."""


class RiordanError(ValueError):
    """Base class for all computational errors raised by riordanpaths."""


class ZeroConstantTerm(RiordanError):
    pass


class NonzeroConstantTerm(RiordanError):
    pass


class NotReversible(RiordanError):
    pass


class NotASquare(RiordanError):
    pass


class NotContractive(RiordanError):
    pass


class OrderExceeded(RiordanError):
    pass


class ParseError(RiordanError):
    pass


class NonIntegralEntry(RiordanError):
    pass


class InvalidArray(RiordanError):
    """The (g, f) pair violates g(0) != 0, f(0) = 0, f'(0) != 0."""


class F2Zero(RiordanError):
    pass


class Beta0Zero(RiordanError):
    pass


class SingularMatrix(RiordanError):
    pass


class NoPotential(RiordanError):
    pass


class InsufficientTerms(RiordanError):
    pass


class InsufficientDepth(RiordanError):
    pass


class ZeroHankel(RiordanError):
    pass


class DimensionMismatch(RiordanError):
    pass
