"""Command-line front end.

    lipgain stats   IN.pgm
    lipgain enhance --method {dynamic|mean|manual} [--lambda X] IN.pgm -o OUT.pgm
    lipgain curve   --method {dynamic|mean} --lambda-min A --lambda-max B --steps N IN.pgm -o OUT.csv

Exit codes: 0 success, 1 usage, 2 I/O or parse failure, 3 degenerate math.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .core import LipContext
from .errors import ConfigError, DomainError, GainError, LipOverflowError, PgmError
from .image import GrayImage, bounds, dynamic_range, img_smul
from .moment_gain import image_stats, lambda_m, mean_dynamic_range, s_m, two_value_summary
from .pnm import DEFAULT_OFFSET, dequantize, quantize, read_pgm, write_pgm
from .range_gain import GainReport, lambda_t, range_curve, s_t

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_MATH = 3


class _MathFailure(Exception):
    def __init__(self, err):
        super().__init__(f"{err.marker}: {err}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load(path, model_max, offset):
    try:
        ctx = LipContext(model_max)
    except DomainError as e:
        raise click.BadParameter(str(e), param_hint="--model-max")
    data = Path(path).read_bytes()
    raw = read_pgm(data)
    try:
        return ctx, dequantize(raw, ctx, offset)
    except ConfigError as e:
        raise click.UsageError(str(e))


def stats_report(ctx: LipContext, f: GrayImage) -> dict:
    """Flat report of bounds, moments, summary and both gains.

    Values whose preconditions fail carry the error marker string instead.
    """
    f_i, f_s = bounds(f)
    st = image_stats(f)
    rep = {
        "width": f.width,
        "height": f.height,
        "M": ctx.M,
        "f_i": f_i,
        "f_s": f_s,
        "D_t": dynamic_range(f),
        "m1": st.m1,
        "m2": st.m2,
        "m3": st.m3,
        "sigma_sq": st.sigma_sq,
        "mu_cubed": st.mu_cubed,
    }
    try:
        rep["lambda_t"] = lambda_t(ctx, f_i, f_s)
    except GainError as e:
        rep["lambda_t"] = e.marker
    try:
        s = two_value_summary(st, ctx)
    except GainError as e:
        for key in ("v_i", "v_s", "p_i", "p_s", "D_m", "lambda_m"):
            rep[key] = e.marker
    else:
        rep.update(v_i=s.v_i, v_s=s.v_s, p_i=s.p_i, p_s=s.p_s, D_m=mean_dynamic_range(s))
        try:
            rep["lambda_m"] = lambda_m(ctx, s.v_i, s.v_s)
        except GainError as e:
            rep["lambda_m"] = e.marker
    return rep


def enhance_image(ctx: LipContext, f: GrayImage, method: str, lam: float | None = None):
    """Select the gain for ``method`` and apply it; returns ``(image, GainReport)``."""
    if method == "manual":
        out = img_smul(ctx, lam, f)
        return out, GainReport(lam, "manual", dynamic_range(f), dynamic_range(out))
    if method == "dynamic":
        return s_t(ctx, f)
    out, report, _ = s_m(ctx, f)
    return out, report


def curve_pair(ctx: LipContext, f: GrayImage, method: str):
    if method == "dynamic":
        return tuple(bounds(f))
    s = two_value_summary(image_stats(f), ctx)
    return s.v_i, s.v_s


def curve_csv(ctx: LipContext, f: GrayImage, method: str, lambda_min: float,
              lambda_max: float, steps: int) -> str:
    lo, hi = curve_pair(ctx, f, method)
    samples = range_curve(ctx, lo, hi, lambda_min, lambda_max, steps)
    lines = ["lambda,range"]
    lines += [f"{s.lam:.6f},{s.range_value:.6f}" for s in samples]
    return "\n".join(lines) + "\n"


def _shared(fn):
    fn = click.option("--format", "fmt", type=click.Choice(["p2", "p5"], case_sensitive=False),
                      default="p5", show_default=True, help="Output PGM flavour.")(fn)
    fn = click.option("--offset", type=float, default=DEFAULT_OFFSET, show_default=True,
                      help="Gray level of code p is p + offset.")(fn)
    fn = click.option("--model-max", type=float, default=256.0, show_default=True,
                      help="Model constant M.")(fn)
    return fn


def _math(fn, *args):
    try:
        return fn(*args)
    except (GainError, LipOverflowError) as e:
        raise _MathFailure(e)


@click.group()
def cli():
    """Logarithmic-model gamma correction for 8-bit grayscale PGM images."""


@cli.command()
@click.argument("input", type=click.Path(dir_okay=False))
@_shared
def stats(input, model_max, offset, fmt):
    """Print bounds, moments, two-value summary and optimal gains as JSON."""
    ctx, f = _load(input, model_max, offset)
    click.echo(_dump(stats_report(ctx, f)), nl=False)


@cli.command()
@click.argument("input", type=click.Path(dir_okay=False))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.option("--method", type=click.Choice(["dynamic", "mean", "manual"]), default="dynamic",
              show_default=True)
@click.option("--lambda", "lam", type=float, default=None, help="Gain for --method manual.")
@_shared
def enhance(input, output, method, lam, model_max, offset, fmt):
    """Apply the optimal (or a given) homothety and write the result."""
    if method == "manual":
        if lam is None:
            raise click.UsageError("--method manual requires --lambda")
        if not lam > 0:
            raise click.BadParameter("must be positive", param_hint="--lambda")
    elif lam is not None:
        raise click.UsageError("--lambda is only valid with --method manual")
    ctx, f = _load(input, model_max, offset)
    out, report = _math(enhance_image, ctx, f, method, lam)
    Path(output).write_bytes(write_pgm(quantize(out, ctx, offset), fmt))
    click.echo(_dump(report.as_dict()), nl=False)


@cli.command()
@click.argument("input", type=click.Path(dir_okay=False))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.option("--method", type=click.Choice(["dynamic", "mean"]), default="dynamic",
              show_default=True)
@click.option("--lambda-min", type=float, required=True)
@click.option("--lambda-max", type=float, required=True)
@click.option("--steps", type=int, required=True)
@_shared
def curve(input, output, method, lambda_min, lambda_max, steps, model_max, offset, fmt):
    """Write the range as a function of the gain, as CSV."""
    if not 0 < lambda_min < lambda_max:
        raise click.UsageError("sweep needs 0 < --lambda-min < --lambda-max")
    if steps < 2:
        raise click.BadParameter("must be at least 2", param_hint="--steps")
    ctx, f = _load(input, model_max, offset)
    text = _math(curve_csv, ctx, f, method, lambda_min, lambda_max, steps)
    Path(output).write_bytes(text.encode("ascii"))


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="lipgain", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except (OSError, PgmError) as e:
        click.echo(f"lipgain: {e}", err=True)
        return EXIT_IO
    except _MathFailure as e:
        click.echo(f"lipgain: {e}", err=True)
        return EXIT_MATH
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())
