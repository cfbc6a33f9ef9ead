"""Optimal enhancement of the mean dynamic range.

The pixel distribution is replaced by two values ``v_i < v_s`` with
probabilities ``p_i + p_s = 1`` that keep the first three raw moments
(the two-point Gaussian quadrature of the distribution).  The gap
``v_s - v_i`` is insensitive to a handful of saturated pixels, so the gain
maximising it is a usable alternative to :func:`~lipgain.range_gain.s_t`
on salt-and-pepper noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .core import LipContext
from .errors import ZeroVariance
from .image import GrayImage, img_smul
from .range_gain import GainReport, check_pair, h, optimal_gain, range_curve

__all__ = [
    "ImageStats",
    "TwoValueSummary",
    "image_stats",
    "two_value_summary",
    "mean_dynamic_range",
    "lambda_m",
    "mean_range_at",
    "mean_range_curve",
    "s_m",
]

# sigma**2 at or below ZERO_VARIANCE_REL * M**2 is treated as no spread
ZERO_VARIANCE_REL = 1e-12


@dataclass(frozen=True)
class ImageStats:
    """Bounds, raw moments and central moments of a pixel distribution.

    ``mu_cubed`` is the third central moment itself; its real cube root is
    never needed downstream.
    """

    f_i: float
    f_s: float
    m1: float
    m2: float
    m3: float
    sigma_sq: float
    mu_cubed: float


@dataclass(frozen=True)
class TwoValueSummary:
    v_i: float
    v_s: float
    p_i: float
    p_s: float


def image_stats(f: GrayImage) -> ImageStats:
    """Moments of the pixel values, accumulated with compensated sums.

    Central moments come from a second pass over ``pixel - m1`` rather than
    from ``m2 - m1**2`` and ``m3 - 3 m2 m1 + 2 m1**3``; the quantities are
    the same, the second pass avoids their cancellation on narrow
    histograms.
    """
    m1, m2, m3, c2, c3 = kernels.moments(f.pixels)
    px = f.pixels
    return ImageStats(float(px.min()), float(px.max()), m1, m2, m3, c2, c3)


def two_value_summary(stats: ImageStats, ctx: LipContext | None = None) -> TwoValueSummary:
    """Solve the three-moment matching system for ``(v_i, v_s, p_i, p_s)``.

    With ``A = m1 - v_i`` and ``B = v_s - m1`` the system reduces to
    ``A * B = sigma**2`` and ``B - A = mu**3 / sigma**2``, hence::

        A = (sqrt(4 sigma**6 + mu**6) - mu**3) / (2 sigma**2)
        B = (sqrt(4 sigma**6 + mu**6) + mu**3) / (2 sigma**2)
        p_s = A / (A + B)

    The larger of ``A``, ``B`` is formed directly and the other from the
    product, so neither suffers cancellation.  Nodes are clamped into
    ``[f_i, f_s]``, which only absorbs rounding: the quadrature nodes of a
    distribution always lie within its support.

    Raises
    ------
    ZeroVariance
        If ``sigma**2 <= 1e-12 * M**2``.
    """
    ctx = ctx or LipContext()
    s2 = stats.sigma_sq
    if not s2 > ZERO_VARIANCE_REL * ctx.M * ctx.M:
        raise ZeroVariance(f"variance {s2!r} is too small for a two-value summary")
    mu3 = stats.mu_cubed
    sigma = math.sqrt(s2)
    root = math.hypot(2.0 * s2 * sigma, mu3)
    if mu3 >= 0:
        B = (root + mu3) / (2.0 * s2)
        A = s2 / B
    else:
        A = (root - mu3) / (2.0 * s2)
        B = s2 / A
    v_i = max(stats.m1 - A, stats.f_i)
    v_s = min(stats.m1 + B, stats.f_s)
    p_s = (stats.m1 - v_i) / (v_s - v_i)
    return TwoValueSummary(v_i, v_s, 1.0 - p_s, p_s)


def mean_dynamic_range(summary: TwoValueSummary) -> float:
    return summary.v_s - summary.v_i


def lambda_m(ctx: LipContext, v_i: float, v_s: float) -> float:
    """Optimal mean logarithmic gain; the bound-pair gain applied to ``(v_i, v_s)``."""
    return optimal_gain(ctx, v_i, v_s)


def mean_range_at(ctx: LipContext, v_i: float, v_s: float, lam: float) -> float:
    """Mean dynamic range after the homothety ``lam``.

    The summary is taken from the untransformed image and the homothety is
    applied to the pair itself.
    """
    return h(ctx, v_i, v_s, lam)


def mean_range_curve(ctx, v_i, v_s, lambda_min, lambda_max, steps):
    return range_curve(ctx, v_i, v_s, lambda_min, lambda_max, steps)


def s_m(ctx: LipContext, f: GrayImage):
    """Mean-dynamic-range transform ``lambda_m(f) <x> f``.

    Returns ``(image, report, summary)``.
    """
    stats = image_stats(f)
    summary = two_value_summary(stats, ctx)
    check_pair(ctx, stats.f_i, stats.f_s)
    lam = lambda_m(ctx, summary.v_i, summary.v_s)
    out = img_smul(ctx, lam, f)
    report = GainReport(
        lam,
        "mean",
        mean_dynamic_range(summary),
        mean_range_at(ctx, summary.v_i, summary.v_s, lam),
    )
    return out, report, summary
