"""Scalar algebra of gray levels over E = (0, inf).

With a ceiling ``M > 0`` the set E carries a real algebra::

    v1 <+> v2 = v1 * v2 / M                          (neutral M)
    lam <x> v = M * (v / M) ** lam
    v1 <.> v2 = M * exp(M * ln(v1 / M) * ln(v2 / M)) (neutral M * e**(1/M))

``phi(v) = ln(v / M)`` maps the structure onto ordinary real arithmetic and
is exposed as :func:`iso_to_real` / :func:`iso_from_real`, mainly so the
test-suite has an independent route for every law.

Results are never clamped to ``(0, M)``; values above ``M`` are legitimate
members of E.  The expressions below are the reference arithmetic: the
pixel kernels evaluate them in the same order so images match scalars
bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, LipOverflowError

__all__ = [
    "LipContext",
    "DEFAULT_M",
    "lip_add",
    "lip_neg",
    "lip_sub",
    "lip_smul",
    "lip_prod",
    "iso_to_real",
    "iso_from_real",
]

DEFAULT_M = 256.0


@dataclass(frozen=True)
class LipContext:
    """Model constant ``M`` and the neutral elements it determines."""

    M: float = DEFAULT_M
    additive_neutral: float = field(init=False)
    product_neutral: float = field(init=False)

    def __post_init__(self):
        M = float(self.M)
        if not (math.isfinite(M) and M > 0):
            raise DomainError(f"model constant M must be a positive finite real, got {self.M!r}")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "additive_neutral", M)
        object.__setattr__(self, "product_neutral", M * math.exp(1.0 / M))


def _check(v, name="v"):
    if not (math.isfinite(v) and v > 0):
        raise DomainError(f"{name}={v!r} is not a gray level in (0, inf)")


def _check_result(r, what):
    if not (math.isfinite(r) and r > 0):
        raise LipOverflowError(f"{what} is not representable (got {r!r})")
    return r


def lip_add(ctx: LipContext, v1: float, v2: float) -> float:
    _check(v1, "v1")
    _check(v2, "v2")
    return _check_result(v1 * v2 / ctx.M, "sum")


def lip_neg(ctx: LipContext, v: float) -> float:
    """Additive opposite ``M**2 / v``."""
    _check(v)
    M = ctx.M
    return _check_result(M * M / v, "opposite")


def lip_sub(ctx: LipContext, v1: float, v2: float) -> float:
    _check(v1, "v1")
    _check(v2, "v2")
    return _check_result(v1 * ctx.M / v2, "difference")


def lip_smul(ctx: LipContext, lam: float, v: float) -> float:
    """Homothety ``lam <x> v``; pixelwise this is a gamma curve of exponent ``lam``."""
    _check(v)
    if not math.isfinite(lam):
        raise DomainError(f"scalar {lam!r} is not finite")
    M = ctx.M
    try:
        r = M * (v / M) ** lam
    except OverflowError:
        r = math.inf
    return _check_result(r, "homothety")


def lip_prod(ctx: LipContext, v1: float, v2: float) -> float:
    """Algebra product.

    The exponent ``M * ln(v1/M) * ln(v2/M)`` grows quickly with ``M``; when
    the result leaves the double range a :class:`LipOverflowError` is raised
    instead of returning ``inf`` or ``0``.
    """
    _check(v1, "v1")
    _check(v2, "v2")
    M = ctx.M
    try:
        r = M * math.exp(M * (math.log(v1 / M) * math.log(v2 / M)))
    except OverflowError:
        r = math.inf
    return _check_result(r, "product")


def iso_to_real(ctx: LipContext, v: float) -> float:
    _check(v)
    return math.log(v / ctx.M)


def iso_from_real(ctx: LipContext, x: float) -> float:
    if not math.isfinite(x):
        raise DomainError(f"{x!r} is not finite")
    try:
        r = ctx.M * math.exp(x)
    except OverflowError:
        r = math.inf
    return _check_result(r, "inverse image")
