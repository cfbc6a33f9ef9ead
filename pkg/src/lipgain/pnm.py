"""8-bit grayscale PGM (P2/P5) codec and the code <-> gray-level bridge.

Codes are moved into the open interval by a half-bin offset: code ``p``
becomes gray level ``p + offset`` (default 0.5), so 0..255 lands strictly
inside (0, 256).  Writing rounds back and saturates; nothing is clamped
before that point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import LipContext
from .errors import ConfigError, PgmParseError, PgmUnsupported
from .image import GrayImage

__all__ = ["RawImage", "read_pgm", "write_pgm", "dequantize", "quantize", "DEFAULT_OFFSET"]

MAXVAL = 255
DEFAULT_OFFSET = 0.5
_WS = b" \t\n\v\f\r"


@dataclass(frozen=True)
class RawImage:
    """Integer-coded image as stored in the file; ``samples`` holds one byte per pixel."""

    width: int
    height: int
    samples: bytes
    maxval: int = MAXVAL

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"image must be at least 1x1, got {self.width}x{self.height}")
        if self.maxval != MAXVAL:
            raise PgmUnsupported(f"maxval {self.maxval} is not supported (only 255)")
        samples = bytes(self.samples)
        if len(samples) != self.width * self.height:
            raise ValueError(f"{len(samples)} samples for a {self.width}x{self.height} image")
        object.__setattr__(self, "samples", samples)

    def as_array(self) -> np.ndarray:
        return np.frombuffer(self.samples, dtype=np.uint8).reshape(self.height, self.width)


class _Scanner:
    """Token reader for Netpbm headers; ``#`` starts a comment up to end of line."""

    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos
        self.start = pos  # offset of the last token read

    def skip_space(self):
        data, n = self.data, len(self.data)
        while self.pos < n:
            c = data[self.pos : self.pos + 1]
            if c in _WS:
                self.pos += 1
            elif c == b"#":
                while self.pos < n and data[self.pos] not in b"\r\n":
                    self.pos += 1
            else:
                break

    def integer(self, what: str) -> int:
        self.skip_space()
        start = self.start = self.pos
        data, n = self.data, len(self.data)
        while self.pos < n and 48 <= data[self.pos] <= 57:
            self.pos += 1
        if self.pos == start:
            if start >= n:
                raise PgmParseError(f"unexpected end of data reading {what}", start)
            raise PgmParseError(f"expected a decimal integer for {what}", start)
        if self.pos < n and data[self.pos : self.pos + 1] not in _WS + b"#":
            raise PgmParseError(f"malformed {what}", self.pos)
        return int(data[start : self.pos])


def read_pgm(data: bytes) -> RawImage:
    """Parse a P2 (ASCII) or P5 (binary) 8-bit PGM stream.

    Raises :class:`PgmParseError` (with byte offset) for malformed input and
    :class:`PgmUnsupported` for other Netpbm types or ``maxval != 255``.
    Bytes after the last sample are ignored.
    """
    data = bytes(data)
    magic = data[:2]
    if len(magic) < 2 or magic[:1] != b"P":
        raise PgmParseError("missing Netpbm magic number", 0)
    if magic not in (b"P2", b"P5"):
        if magic in (b"P1", b"P3", b"P4", b"P6", b"P7"):
            raise PgmUnsupported(f"Netpbm type {magic.decode()} is not an 8-bit grayscale PGM")
        raise PgmParseError(f"unknown magic number {magic!r}", 0)
    if len(data) > 2 and data[2:3] not in _WS + b"#":
        raise PgmParseError("magic number not followed by whitespace", 2)

    sc = _Scanner(data, 2)
    width = sc.integer("width")
    height = sc.integer("height")
    if width < 1 or height < 1:
        raise PgmParseError(f"invalid dimensions {width}x{height}", sc.pos)
    maxval = sc.integer("maxval")
    if maxval != MAXVAL:
        raise PgmUnsupported(f"maxval {maxval} is not supported (only 255) at byte {sc.start}")
    count = width * height

    if magic == b"P5":
        if sc.pos >= len(data) or data[sc.pos] not in _WS:
            raise PgmParseError("expected one whitespace byte after maxval", sc.pos)
        # exactly one whitespace byte separates the header from the raster
        start = sc.pos + 1
        payload = data[start : start + count]
        if len(payload) < count:
            raise PgmParseError(
                f"truncated raster: {len(payload)} of {count} samples", start + len(payload)
            )
        return RawImage(width, height, payload)

    samples = bytearray(count)
    for k in range(count):
        v = sc.integer(f"sample {k}")
        if v > maxval:
            raise PgmParseError(f"sample {v} exceeds maxval {maxval}", sc.start)
        samples[k] = v
    return RawImage(width, height, bytes(samples))


def write_pgm(img: RawImage, format: str = "P5") -> bytes:
    """Canonical encoding: ``P5\\n<w> <h>\\n255\\n`` + raster; P2 writes one text row per image row."""
    fmt = format.upper()
    header = f"{fmt}\n{img.width} {img.height}\n{MAXVAL}\n".encode("ascii")
    if fmt == "P5":
        return header + img.samples
    if fmt == "P2":
        w = img.width
        s = img.samples
        rows = (
            " ".join(str(c) for c in s[r * w : (r + 1) * w]) for r in range(img.height)
        )
        return header + "".join(row + "\n" for row in rows).encode("ascii")
    raise PgmUnsupported(f"unknown output format {format!r}")


def _check_offset(ctx: LipContext, offset: float):
    if not 0 < offset < 1:
        raise ConfigError(f"offset must lie in (0, 1), got {offset!r}")
    if not MAXVAL + offset < ctx.M:
        raise ConfigError(
            f"M={ctx.M!r} leaves no headroom: code 255 maps to {MAXVAL + offset!r}, "
            "which must stay below M"
        )


def dequantize(raw: RawImage, ctx: LipContext, offset: float = DEFAULT_OFFSET) -> GrayImage:
    _check_offset(ctx, offset)
    codes = np.frombuffer(raw.samples, dtype=np.uint8)
    return GrayImage(raw.width, raw.height, codes.astype(np.float64) + offset)


def quantize(f: GrayImage, ctx: LipContext, offset: float = DEFAULT_OFFSET) -> RawImage:
    """Round gray levels back to codes, saturating outside ``[offset, 255 + offset]``.

    Ties round to even.
    """
    _check_offset(ctx, offset)
    v = np.clip(f.pixels, offset, MAXVAL + offset) - offset
    codes = np.clip(np.rint(v), 0, MAXVAL).astype(np.uint8)
    return RawImage(f.width, f.height, codes.tobytes())
