"""Command-line entry point: count, enumerate, kostant, juggle, render, crosscheck.

Exit codes: 0 success, 1 invalid input or refused computation, 2 usage error.

Usage:
    betti-fibers count 2,3,2 --method kostant
    betti-fibers enumerate 2,3,2 --format render
    betti-fibers juggle barcode.json --to sequence --n 2
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import IO, Any

import click

from .config import FiberConfig, load_config
from .core import Barcode, BettiCurve
from .crosscheck import format_report, run_crosscheck
from .errors import BettiFibersError, EnumerationCapError, InvalidBettiCurveError
from .fiber import brute_force_barcodes, count_barcodes, enumerate_barcodes, young_overlays
from .juggling import (
    ZERO_STATE,
    JugglingSequence,
    differential,
    enumerate_sequences,
    is_valid,
    sigma,
    sigma_inverse,
)
from .kostant import Weight, format_partition, kostant_count, kostant_partitions, weight_of_betti
from .render import render_barcode, render_buckets, render_overlay

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Parameter types and plumbing
# ---------------------------------------------------------------------------

class CurveParam(click.ParamType):
    """Comma-separated nonnegative integers, e.g. 2,3,2."""
    name = "curve"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> BettiCurve:
        if isinstance(value, BettiCurve):
            return value
        try:
            return BettiCurve.parse(value)
        except InvalidBettiCurveError as exc:
            self.fail(str(exc), param, ctx)


class IntListParam(click.ParamType):
    """Comma-separated integers (signs allowed)."""
    name = "coords"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> list[int]:
        if isinstance(value, list):
            return value
        try:
            return [int(part) for part in value.split(",")] if value.strip() else []
        except ValueError:
            self.fail(f"malformed integer list {value!r}", param, ctx)


CURVE = CurveParam()
COORDS = IntListParam()


class FiberGroup(click.Group):
    """Turns domain errors into exit code 1 with a one-line message."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except BettiFibersError as exc:
            raise click.ClickException(str(exc)) from exc


def _read_json(stream: IO[str]) -> Any:
    try:
        return json.load(stream)
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"input is not valid JSON: {exc}") from exc


def _config(ctx: click.Context) -> FiberConfig:
    return ctx.ensure_object(FiberConfig)


# ---------------------------------------------------------------------------
# Group
# ---------------------------------------------------------------------------

@click.group(cls=FiberGroup)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="JSON file with FiberConfig fields.")
@click.option("--cap", type=click.IntRange(min=1), default=None,
              help="Enumeration cap (default 1000000).")
@click.option("--workers", type=click.IntRange(min=0), default=None,
              help="Thread pool size for counting and crosscheck (0 = serial).")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr.")
@click.pass_context
def cli(ctx: click.Context, config_path: Path | None, cap: int | None,
        workers: int | None, verbose: bool) -> None:
    """Count and enumerate the barcodes behind a Betti curve."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    config = load_config(config_path) if config_path else FiberConfig()
    ctx.obj = config.with_overrides(enumeration_cap=cap, workers=workers)


# ---------------------------------------------------------------------------
# count / enumerate
# ---------------------------------------------------------------------------

def _count_by(method: str, beta: BettiCurve, config: FiberConfig) -> int:
    cap = config.enumeration_cap
    logger.debug("counting %s via %s", beta, method)
    if method == "recursion":
        return count_barcodes(beta, workers=config.workers)
    if method == "kostant":
        return kostant_count(weight_of_betti(beta))
    if method == "brute":
        if len(beta) > config.brute_force_max_n:
            raise BettiFibersError(
                f"brute force is limited to curves of length <= {config.brute_force_max_n}, "
                f"got {len(beta)}"
            )
        expected = count_barcodes(beta)
        if expected > cap:
            raise EnumerationCapError(f"Barc({beta}) by brute force", expected, cap)
        return len(brute_force_barcodes(beta))
    # juggling: |JS(<delta(beta)>, <0>, n)|
    return len(enumerate_sequences(differential(beta).state, ZERO_STATE, len(beta), cap=cap))


@cli.command("count")
@click.argument("betti", type=CURVE)
@click.option("--method", type=click.Choice(["recursion", "brute", "kostant", "juggling"]),
              default="recursion", show_default=True)
@click.pass_context
def cmd_count(ctx: click.Context, betti: BettiCurve, method: str) -> None:
    """Print |Barc(BETTI)|."""
    click.echo(_count_by(method, betti, _config(ctx)))


@cli.command("enumerate")
@click.argument("betti", type=CURVE)
@click.option("--format", "fmt", type=click.Choice(["json", "render"]), default="json",
              show_default=True)
@click.option("--ascii", "ascii_glyphs", is_flag=True, help="Plain ASCII glyphs.")
@click.pass_context
def cmd_enumerate(ctx: click.Context, betti: BettiCurve, fmt: str, ascii_glyphs: bool) -> None:
    """List every barcode with Betti curve BETTI (one JSON array per line)."""
    config = _config(ctx).with_overrides(ascii_glyphs=ascii_glyphs or None)
    barcodes = enumerate_barcodes(betti, cap=config.enumeration_cap)
    if fmt == "json":
        for barcode in barcodes:
            click.echo(barcode.dumps())
        return
    blocks = []
    for k, barcode in enumerate(barcodes, start=1):
        canvas = render_barcode(barcode, len(betti), ascii_glyphs=config.ascii_glyphs)
        blocks.append(f"#{k} {barcode}\n{canvas.text()}")
    click.echo("\n".join(blocks), nl=False)


# ---------------------------------------------------------------------------
# kostant
# ---------------------------------------------------------------------------

@cli.command("kostant")
@click.argument("weight", type=COORDS)
@click.option("--basis", type=click.Choice(["simple", "standard"]), default="simple",
              show_default=True)
@click.option("--list", "show_list", is_flag=True, help="Also print every partition.")
def cmd_kostant(weight: list[int], basis: str, show_list: bool) -> None:
    """Print K(WEIGHT), the Kostant partition function."""
    mu = Weight.from_json({"basis": basis, "coords": weight})
    click.echo(kostant_count(mu))
    if show_list:
        for partition in kostant_partitions(mu):
            click.echo(format_partition(partition))


# ---------------------------------------------------------------------------
# juggle / render
# ---------------------------------------------------------------------------

@cli.command("juggle")
@click.argument("source", type=click.File("r"), default="-")
@click.option("--to", "target", type=click.Choice(["sequence", "barcode", "buckets", "validate"]),
              required=True)
@click.option("--n", "n", type=click.IntRange(min=0), default=None,
              help="Ambient length for --to sequence (default: max death - 1).")
@click.option("--ascii", "ascii_glyphs", is_flag=True, help="Plain ASCII glyphs.")
@click.pass_context
def cmd_juggle(ctx: click.Context, source: IO[str], target: str, n: int | None,
           ascii_glyphs: bool) -> None:
    """Convert between barcodes and magic juggling sequences (JSON on SOURCE or stdin)."""
    config = _config(ctx).with_overrides(ascii_glyphs=ascii_glyphs or None)
    data = _read_json(source)
    if target == "sequence":
        barcode = Barcode.from_json(data)
        length = n if n is not None else max(barcode.max_death - 1, 1)
        click.echo(json.dumps(sigma(barcode, length).to_json()))
        return

    seq = JugglingSequence.from_json(data)
    if target == "validate":
        verdict = is_valid(seq)
        click.echo("valid" if verdict else f"invalid: {verdict.message}")
        if not verdict:
            ctx.exit(1)
    elif target == "barcode":
        click.echo(sigma_inverse(seq).dumps())
    else:
        click.echo(render_buckets(seq, ascii_glyphs=config.ascii_glyphs).text(), nl=False)


@cli.command("render")
@click.argument("source", type=click.File("r"), default="-")
@click.option("--kind", type=click.Choice(["barcode", "buckets"]), default="barcode",
              show_default=True)
@click.option("--n", "n", type=click.IntRange(min=0), default=None)
@click.option("--overlay", type=CURVE, default=None,
              help="Draw every Young overlay of this curve instead of reading SOURCE.")
@click.option("--ascii", "ascii_glyphs", is_flag=True, help="Plain ASCII glyphs.")
@click.pass_context
def cmd_render(ctx: click.Context, source: IO[str], kind: str, n: int | None,
           overlay: BettiCurve | None, ascii_glyphs: bool) -> None:
    """Draw a barcode or a bucket diagram from JSON, or the overlays of a curve."""
    config = _config(ctx).with_overrides(ascii_glyphs=ascii_glyphs or None)
    if overlay is not None:
        blocks = [
            f"Y = {y.values}\n{render_overlay(y, ascii_glyphs=config.ascii_glyphs).text()}"
            for y in young_overlays(overlay)
        ]
        click.echo("\n".join(blocks), nl=False)
        return
    data = _read_json(source)
    if kind == "barcode":
        barcode = Barcode.from_json(data)
        length = n if n is not None else barcode.max_death - 1
        canvas = render_barcode(barcode, length, ascii_glyphs=config.ascii_glyphs)
    else:
        canvas = render_buckets(JugglingSequence.from_json(data), ascii_glyphs=config.ascii_glyphs)
    click.echo(canvas.text(), nl=False)


# ---------------------------------------------------------------------------
# crosscheck
# ---------------------------------------------------------------------------

@cli.command("crosscheck")
@click.option("--max-n", type=click.IntRange(min=1), default=None)
@click.option("--max-entry", type=click.IntRange(min=0), default=None)
@click.option("--report-file", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Append mismatches here as JSON lines.")
@click.pass_context
def cmd_crosscheck(ctx: click.Context, max_n: int | None, max_entry: int | None,
               report_file: Path | None) -> None:
    """Check recursion = brute force = Kostant = juggling over a grid of curves."""
    config = _config(ctx).with_overrides(
        crosscheck_max_n=max_n, crosscheck_max_entry=max_entry, report_file=report_file,
    )
    reports = run_crosscheck(config)
    click.echo(format_report(reports), nl=False)
    if not all(r.ok for r in reports):
        ctx.exit(1)


def main() -> None:
    cli(prog_name="betti-fibers")


if __name__ == "__main__":
    main()
