import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lipgain import (
    ConfigError,
    GrayImage,
    LipContext,
    PgmParseError,
    PgmUnsupported,
    RawImage,
    dequantize,
    lip_neg,
    quantize,
    read_pgm,
    write_pgm,
)


def test_read_p2():
    raw = read_pgm(b"P2\n2 1\n255\n16 64\n")
    assert (raw.width, raw.height, list(raw.samples)) == (2, 1, [16, 64])


def test_read_p5_equals_p2():
    assert read_pgm(b"P5\n2 1\n255\n\x10\x40") == read_pgm(b"P2\n2 1\n255\n16 64\n")


@pytest.mark.parametrize("magic", [b"P1", b"P3", b"P4", b"P6", b"P7"])
def test_other_netpbm_types_unsupported(magic):
    with pytest.raises(PgmUnsupported):
        read_pgm(magic + b"\n1 1\n255\n0 0 0\n")


def test_maxval_other_than_255_unsupported():
    with pytest.raises(PgmUnsupported):
        read_pgm(b"P2\n1 1\n65535\n0\n")
    with pytest.raises(PgmUnsupported):
        read_pgm(b"P5\n1 1\n15\n\x00")


@pytest.mark.parametrize(
    "data, offset",
    [
        (b"", 0),
        (b"GIF89a", 0),
        (b"PX\n1 1\n255\n0", 0),
        (b"P2\nx 1\n255\n0\n", 3),
        (b"P2\n1", 4),
        (b"P2\n2 1\n255\n16\n", 14),
        (b"P2\n1 1\n255\n300\n", 11),
        (b"P2\n1 1\n255\n1x\n", 12),
        (b"P5\n2 2\n255\n\x00\x01", 13),
        (b"P5\n1 1\n255", 10),
        (b"P2\n0 1\n255\n", 6),
    ],
)
def test_parse_errors_carry_offset(data, offset):
    with pytest.raises(PgmParseError) as exc:
        read_pgm(data)
    assert exc.value.offset == offset


def test_header_comments_and_whitespace():
    plain = read_pgm(b"P5\n3 1\n255\n\x01\x02\x03")
    noisy = read_pgm(b"P5 # magic\n#full line\n  3\t\t1\r\n# another\n255\n\x01\x02\x03")
    assert noisy == plain
    assert read_pgm(b"P2 #c\n3 #w\n1\n255\n# inside\n1\n2 #x\n  3") == plain


def test_p5_raster_bytes_may_look_like_whitespace_or_comments():
    raw = read_pgm(b"P5\n3 1\n255\n#\n ")
    assert list(raw.samples) == [ord("#"), ord("\n"), ord(" ")]


def test_canonical_writer():
    assert write_pgm(RawImage(1, 1, b"\x00"), "P2") == b"P2\n1 1\n255\n0\n"
    assert write_pgm(RawImage(1, 1, b"\xff"), "P5") == b"P5\n1 1\n255\n\xff"
    assert write_pgm(RawImage(2, 2, bytes([1, 2, 3, 4])), "P2") == b"P2\n2 2\n255\n1 2\n3 4\n"
    with pytest.raises(PgmUnsupported):
        write_pgm(RawImage(1, 1, b"\x00"), "P6")


def test_raw_image_validates():
    with pytest.raises(ValueError):
        RawImage(2, 2, b"\x00")
    with pytest.raises(PgmUnsupported):
        RawImage(1, 1, b"\x00", maxval=65535)


raws = st.tuples(st.integers(1, 20), st.integers(1, 20)).flatmap(
    lambda wh: st.builds(RawImage, st.just(wh[0]), st.just(wh[1]),
                         st.binary(min_size=wh[0] * wh[1], max_size=wh[0] * wh[1]))
)


@settings(max_examples=100)
@given(raws, st.sampled_from(["P2", "P5"]))
def test_write_read_round_trip(raw, fmt):
    data = write_pgm(raw, fmt)
    assert read_pgm(data) == raw
    assert write_pgm(read_pgm(data), fmt) == data


comment = st.text(alphabet="abc xyz#\t", max_size=8).map(lambda t: "#" + t + "\n")
space = st.lists(st.sampled_from([" ", "\t", "\n", "\r", "\f", "\v"]), min_size=1, max_size=3).map("".join)
@settings(max_examples=100)
@given(raws, st.lists(space, min_size=3, max_size=3), st.lists(comment, min_size=3, max_size=3))
def test_header_noise_does_not_change_image(raw, spaces, comments):
    header = "P5" + spaces[0] + comments[0] + f"{raw.width}" + spaces[1] + comments[1]
    header += f"{raw.height}" + spaces[2] + comments[2] + "255\n"
    assert read_pgm(header.encode() + raw.samples) == raw


def test_dequantize_offsets(ctx):
    raw = RawImage(2, 1, bytes([0, 255]))
    assert dequantize(raw, ctx).pixels.tolist() == [0.5, 255.5]
    f = dequantize(RawImage(256, 1, bytes(range(256))), ctx)
    assert 0 < f.pixels.min() and f.pixels.max() < ctx.M


def test_quantize_inverts_dequantize_for_every_code(ctx):
    raw = RawImage(16, 16, bytes(range(256)))
    assert quantize(dequantize(raw, ctx), ctx) == raw
    for offset in (0.1, 0.5, 0.9):
        assert quantize(dequantize(raw, ctx, offset), ctx, offset) == raw


def test_quantize_clamps_on_write(ctx):
    f = GrayImage.from_array([lip_neg(ctx, 64.0), 0.01, 100.2, 100.7, 2.5, 3.5])
    assert list(quantize(f, ctx).samples) == [255, 0, 100, 100, 2, 3]


def test_offset_configuration_errors():
    raw = RawImage(1, 1, b"\x00")
    with pytest.raises(ConfigError):
        dequantize(raw, LipContext(255.5))
    with pytest.raises(ConfigError):
        dequantize(raw, LipContext(256.0), offset=1.0)
    with pytest.raises(ConfigError):
        dequantize(raw, LipContext(256.0), offset=0.0)
    assert dequantize(raw, LipContext(255.6)).pixels[0] == 0.5
