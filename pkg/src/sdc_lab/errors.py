"""Exception hierarchy shared by all modules."""


class SDCError(Exception):
    """Base class for every error raised by sdc_lab."""


class NonHermitian(SDCError, ValueError):
    pass


class NoConvergence(SDCError, RuntimeError):
    pass


class InvalidState(SDCError, ValueError):
    pass


class SupportViolation(SDCError, ValueError):
    """Relative entropy is infinite: rho has weight outside the support of sigma."""


class InvalidDimension(SDCError, ValueError):
    pass


class NonUnitary(SDCError, ValueError):
    pass


class RangeError(SDCError, ValueError):
    pass


class NotMES(SDCError, ValueError):
    pass


class DimensionMismatch(SDCError, ValueError):
    pass


class InvalidProbability(SDCError, ValueError):
    pass


class InvalidChannel(SDCError, ValueError):
    pass
