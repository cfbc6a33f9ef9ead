"""Optimal enhancement of the dynamic range.

For bounds ``0 < f_i < f_s < M`` the range of the homothetic ``lam <x> f`` is

    h(lam) = M * (f_s/M)**lam - M * (f_i/M)**lam

which has a single positive maximiser in closed form (:func:`optimal_gain`).
The same formula serves the mean-range transform, fed with the two-value
summary instead of the image bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import LipContext
from .errors import DegenerateRange, DomainError, OutOfDomain
from .image import GrayImage, bounds, dynamic_range, img_smul

__all__ = [
    "GainReport",
    "CurveSample",
    "h",
    "h_prime",
    "h_second",
    "optimal_gain",
    "lambda_t",
    "s_t",
    "range_curve",
]

# relative width below which a bound pair counts as a single value
DEGENERATE_REL = 1e-9


@dataclass(frozen=True)
class GainReport:
    """Gain applied by a transform and the range before/after it.

    ``method`` is ``"dynamic"`` (bounds), ``"mean"`` (two-value summary) or
    ``"manual"`` (user-supplied gain, not optimal).  For the optimal methods
    ``range_after >= range_before`` holds up to rounding.
    """

    lam: float
    method: str
    range_before: float
    range_after: float

    def as_dict(self):
        return {
            "lambda": self.lam,
            "method": self.method,
            "range_after": self.range_after,
            "range_before": self.range_before,
        }


class CurveSample(NamedTuple):
    lam: float
    range_value: float


def log_ratio(M: float, v: float) -> float:
    """``ln(v / M)`` without the cancellation of ``log`` near ``v == M``."""
    if v > 0.5 * M:
        return math.log1p((v - M) / M)
    return math.log(v / M)


def check_pair(ctx: LipContext, lo: float, hi: float):
    """Validate ``0 < lo < hi < M``.

    Raises :class:`OutOfDomain` for pairs outside the open interval or in
    the wrong order and :class:`DegenerateRange` when ``hi - lo`` is below
    ``1e-9 * M``.
    """
    M = ctx.M
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise OutOfDomain(f"non-finite bound pair ({lo!r}, {hi!r})")
    if not (0 < lo and hi < M):
        raise OutOfDomain(f"bounds ({lo!r}, {hi!r}) are not inside (0, {M!r})")
    if lo > hi:
        raise OutOfDomain(f"lower bound {lo!r} exceeds upper bound {hi!r}")
    if hi - lo < DEGENERATE_REL * M or math.log1p((hi - lo) / lo) == 0.0:
        raise DegenerateRange(f"bounds ({lo!r}, {hi!r}) span no usable range")


def _check_lambda(lam):
    if not (math.isfinite(lam) and lam > 0):
        raise DomainError(f"gain must be a positive finite real, got {lam!r}")


def h(ctx: LipContext, f_i: float, f_s: float, lam: float) -> float:
    check_pair(ctx, f_i, f_s)
    _check_lambda(lam)
    M = ctx.M
    return M * (f_s / M) ** lam - M * (f_i / M) ** lam


def h_prime(ctx: LipContext, f_i: float, f_s: float, lam: float) -> float:
    check_pair(ctx, f_i, f_s)
    _check_lambda(lam)
    M = ctx.M
    ls, li = log_ratio(M, f_s), log_ratio(M, f_i)
    return M * (f_s / M) ** lam * ls - M * (f_i / M) ** lam * li


def h_second(ctx: LipContext, f_i: float, f_s: float, lam: float) -> float:
    check_pair(ctx, f_i, f_s)
    _check_lambda(lam)
    M = ctx.M
    ls, li = log_ratio(M, f_s), log_ratio(M, f_i)
    return M * (f_s / M) ** lam * ls * ls - M * (f_i / M) ** lam * li * li


def optimal_gain(ctx: LipContext, lo: float, hi: float) -> float:
    """Unique ``lam > 0`` maximising ``M(hi/M)**lam - M(lo/M)**lam``.

    ``ln(ln(M/lo) / ln(M/hi)) / ln(hi/lo)``, with the logarithms of ratios
    close to one taken through ``log1p``.
    """
    check_pair(ctx, lo, hi)
    M = ctx.M
    a = -log_ratio(M, lo)
    b = -log_ratio(M, hi)
    return math.log(a / b) / math.log1p((hi - lo) / lo)


def lambda_t(ctx: LipContext, f_i: float, f_s: float) -> float:
    """Optimal logarithmic gain for the bound pair ``(f_i, f_s)``."""
    return optimal_gain(ctx, f_i, f_s)


def s_t(ctx: LipContext, f: GrayImage):
    """Dynamic-range transform: ``lambda_t(f) <x> f``.

    Returns the enhanced image and a :class:`GainReport` with the gain and
    the dynamic range before and after.
    """
    f_i, f_s = bounds(f)
    lam = lambda_t(ctx, f_i, f_s)
    out = img_smul(ctx, lam, f)
    return out, GainReport(lam, "dynamic", dynamic_range(f), dynamic_range(out))


def range_curve(ctx: LipContext, f_i: float, f_s: float, lambda_min: float,
                lambda_max: float, steps: int) -> list[CurveSample]:
    """Sample ``h`` at ``steps`` evenly spaced gains, endpoints included."""
    if not (math.isfinite(lambda_min) and math.isfinite(lambda_max)
            and 0 < lambda_min < lambda_max):
        raise DomainError(f"invalid sweep [{lambda_min!r}, {lambda_max!r}]")
    if int(steps) != steps or steps < 2:
        raise DomainError(f"sweep needs at least 2 steps, got {steps!r}")
    check_pair(ctx, f_i, f_s)
    grid = np.linspace(lambda_min, lambda_max, int(steps)).tolist()
    return [CurveSample(lam, h(ctx, f_i, f_s, lam)) for lam in grid]
