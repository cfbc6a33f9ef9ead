"""Exception hierarchy shared by the algebra, the gain solvers and the codec."""


class LipError(ValueError):
    """Base class for every error raised by lipgain."""

    #: short machine-readable tag, used by the CLI for per-field markers
    marker = "lip-error"


class DomainError(LipError):
    """A gray level outside E = (0, inf), or a non-finite scalar."""

    marker = "domain-error"

    def __init__(self, message, index=None):
        if index is not None:
            message = f"{message} (pixel {index})"
        super().__init__(message)
        self.index = index


class LipOverflowError(LipError, ArithmeticError):
    """Result of an operation is not representable as a positive finite double."""

    marker = "overflow"

    def __init__(self, message, index=None):
        if index is not None:
            message = f"{message} (pixel {index})"
        super().__init__(message)
        self.index = index


class DimensionMismatch(LipError):
    marker = "dimension-mismatch"


class GainError(LipError):
    """Base class for failures of the gain solvers."""


class OutOfDomain(GainError):
    """Bound pair violates 0 < low < high < M."""

    marker = "out-of-domain"


class DegenerateRange(GainError):
    """Bound pair is (numerically) a single value; the gain is undefined."""

    marker = "degenerate-range"


class ZeroVariance(GainError):
    """Pixel distribution has no spread; the two-value summary is singular."""

    marker = "zero-variance"


class ConfigError(LipError):
    marker = "config-error"


class PgmError(LipError):
    marker = "pgm-error"


class PgmParseError(PgmError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class PgmUnsupported(PgmError):
    marker = "unsupported-format"
