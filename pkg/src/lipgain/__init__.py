"""Logarithmic image processing with optimal homothetic gains."""

from .core import (
    DEFAULT_M,
    LipContext,
    iso_from_real,
    iso_to_real,
    lip_add,
    lip_neg,
    lip_prod,
    lip_smul,
    lip_sub,
)
from .errors import (
    ConfigError,
    DegenerateRange,
    DimensionMismatch,
    DomainError,
    LipError,
    LipOverflowError,
    OutOfDomain,
    PgmError,
    PgmParseError,
    PgmUnsupported,
    ZeroVariance,
)
from .image import Bounds, GrayImage, bounds, dynamic_range, img_add, img_prod, img_smul, img_sub
from .kernels import BACKEND
from .moment_gain import (
    ImageStats,
    TwoValueSummary,
    image_stats,
    lambda_m,
    mean_dynamic_range,
    mean_range_at,
    s_m,
    two_value_summary,
)
from .pnm import RawImage, dequantize, quantize, read_pgm, write_pgm
from .range_gain import CurveSample, GainReport, h, h_prime, h_second, lambda_t, range_curve, s_t

__version__ = "0.1.0"
