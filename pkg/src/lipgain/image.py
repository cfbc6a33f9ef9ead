"""Gray-level images and the pixelwise lift of the scalar algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .core import LipContext
from .errors import DimensionMismatch, DomainError, LipOverflowError

__all__ = [
    "GrayImage",
    "Bounds",
    "img_add",
    "img_sub",
    "img_smul",
    "img_prod",
    "bounds",
    "dynamic_range",
]


@dataclass(frozen=True, eq=False)
class GrayImage:
    """A ``width x height`` grid of gray levels stored row-major as float64.

    Every pixel must lie in (0, inf).  Whether the image is also below the
    ceiling ``M`` depends on the context and is checked by
    :meth:`is_image_valid`, not at construction.
    """

    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise DimensionMismatch(f"image must be at least 1x1, got {self.width}x{self.height}")
        px = np.array(self.pixels, dtype=np.float64).ravel()
        if px.size != self.width * self.height:
            raise DimensionMismatch(
                f"{px.size} pixels do not fill a {self.width}x{self.height} grid"
            )
        bad = np.flatnonzero(~(np.isfinite(px) & (px > 0)))
        if bad.size:
            k = int(bad[0])
            raise DomainError(f"value {px[k]!r} is not a gray level", index=k)
        px.flags.writeable = False
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_array(cls, arr) -> "GrayImage":
        """Build from a 2-D ``(height, width)`` array, or a 1-D row."""
        a = np.asarray(arr, dtype=np.float64)
        if a.ndim == 1:
            a = a[np.newaxis, :]
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got shape {a.shape}")
        return cls(a.shape[1], a.shape[0], a)

    def as_array(self) -> np.ndarray:
        return self.pixels.reshape(self.height, self.width)

    def is_image_valid(self, ctx: LipContext) -> bool:
        return bool(self.pixels.max() < ctx.M)

    def __len__(self):
        return self.pixels.size

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None


class Bounds(NamedTuple):
    f_i: float
    f_s: float


def _same_shape(f1: GrayImage, f2: GrayImage):
    if (f1.width, f1.height) != (f2.width, f2.height):
        raise DimensionMismatch(
            f"operands are {f1.width}x{f1.height} and {f2.width}x{f2.height}"
        )


def _wrap(template: GrayImage, result, what):
    out, bad = result
    if bad >= 0:
        raise LipOverflowError(f"{what} is not representable (got {out[bad]!r})", index=int(bad))
    return GrayImage(template.width, template.height, out)


def img_add(ctx: LipContext, f1: GrayImage, f2: GrayImage) -> GrayImage:
    _same_shape(f1, f2)
    return _wrap(f1, kernels.add(f1.pixels, f2.pixels, ctx.M), "sum")


def img_sub(ctx: LipContext, f1: GrayImage, f2: GrayImage) -> GrayImage:
    _same_shape(f1, f2)
    return _wrap(f1, kernels.sub(f1.pixels, f2.pixels, ctx.M), "difference")


def img_smul(ctx: LipContext, lam: float, f: GrayImage) -> GrayImage:
    lam = float(lam)
    if not np.isfinite(lam):
        raise DomainError(f"scalar {lam!r} is not finite")
    return _wrap(f, kernels.smul(f.pixels, lam, ctx.M), "homothety")


def img_prod(ctx: LipContext, f1: GrayImage, f2: GrayImage) -> GrayImage:
    _same_shape(f1, f2)
    return _wrap(f1, kernels.prod(f1.pixels, f2.pixels, ctx.M), "product")


def bounds(f: GrayImage) -> Bounds:
    """Lower and upper bound of ``f`` (min and max over the pixel grid)."""
    return Bounds(float(f.pixels.min()), float(f.pixels.max()))


def dynamic_range(f: GrayImage) -> float:
    """``f_s - f_i`` as an ordinary real difference."""
    lo, hi = bounds(f)
    return hi - lo
