#!/usr/bin/env python
import functools
import logging
import sys
from typing import Any, Callable, Optional, TypeVar, cast

import click

from .board import BoardLayout
from .config import DEFAULT_MAX_MN, ENV_MAX_MN, Settings
from .enumerator import ClassTally, enumerate_classes, stream_representatives
from .enums import ClosureMode, OutputFormat
from .exceptions import OracleBoundError, SieveException
from .formatter import TupleFormatter, get_formatter
from .instances import matrix_universe, sieve_primes
from .matrices import Dims
from .oracles import brute_force_classes, burnside_count
from .sieve import run_sieve

F = TypeVar("F", bound=Callable[..., Any])


def reports_errors(func: F) -> F:
    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except SieveException as exc:
            raise click.ClickException(str(exc)) from exc

    return cast(F, wrapper)


def dims_options(func: F) -> F:
    func = click.option("--cols", "-n", type=click.IntRange(min=1), required=True, help="column count")(func)
    func = click.option("--rows", "-m", type=click.IntRange(min=1), required=True, help="row count")(func)
    return func


def bound_option(func: F) -> F:
    return click.option(
        "--max-mn",
        type=click.IntRange(min=1),
        default=DEFAULT_MAX_MN,
        envvar=ENV_MAX_MN,
        show_default=True,
        help=f"largest m*n that may be enumerated (env {ENV_MAX_MN})",
    )(func)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="status lines on stderr")
def mdsieve(verbose: bool) -> None:
    """Count and list Boolean matrices up to cyclic row and column rotation."""
    if verbose:
        logging.basicConfig(
            stream=sys.stderr,
            level=logging.DEBUG,
            format="%(levelname)s %(name)s: %(message)s",
        )


@mdsieve.command()
@dims_options
@bound_option
@click.option("--by-weight", is_flag=True, help="also count classes per number of ones")
@reports_errors
def count(rows: int, cols: int, max_mn: int, by_weight: bool) -> None:
    """Print the number of classes"""
    tally = ClassTally()
    stream_representatives(Dims(rows, cols), tally, Settings(max_mn=max_mn))
    click.echo(f"classes={tally.class_count}")
    if by_weight:
        for ones, classes in tally.by_weight().items():
            click.echo(f"weight={ones} classes={classes}")


@mdsieve.command(name="enumerate")
@dims_options
@bound_option
@click.option(
    "--format",
    "output_format",
    type=click.Choice(OutputFormat.get_format_list(), case_sensitive=False),
    default=OutputFormat.TUPLE.value,
    show_default=True,
    help="tuple and matrix write the representative file; json and yaml dump the report",
)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="write here instead of stdout")
@reports_errors
def enumerate_command(rows: int, cols: int, max_mn: int, output_format: str, out: Optional[str]) -> None:
    """Write one representative per class"""
    dims = Dims(rows, cols)
    settings = Settings(max_mn=max_mn)
    formatter = get_formatter(output_format)
    # raises on an infeasible size before --out is created
    BoardLayout(dims, settings)

    def emit(write: Callable[[str], Any]) -> None:
        if isinstance(formatter, TupleFormatter):
            formatter.write_report(dims, write, settings)
        else:
            write(formatter.format_report(enumerate_classes(dims, settings)))

    if out is None:
        emit(lambda text: click.echo(text, nl=False))
        return
    try:
        with open(out, "w", encoding="ascii", newline="\n") as f:
            emit(f.write)
    except OSError as exc:
        raise click.ClickException(f"cannot write {out}: {exc}") from exc


@mdsieve.command()
@dims_options
@bound_option
@click.option("--generic", is_flag=True, help="also run the generic one-dimensional sieve")
@click.pass_context
@reports_errors
def verify(ctx: click.Context, rows: int, cols: int, max_mn: int, generic: bool) -> None:
    """Compare the sieve against the Burnside and brute-force counts"""
    dims = Dims(rows, cols)
    settings = Settings(max_mn=max_mn)
    counts: dict[str, Optional[int]] = {}

    tally = ClassTally()
    stream_representatives(dims, tally, settings)
    counts["sieve"] = tally.class_count

    try:
        counts["burnside"] = burnside_count(dims, settings).total
    except OracleBoundError:
        counts["burnside"] = None
    if dims.cells <= settings.verify_brute_max_mn:
        counts["brute"] = brute_force_classes(dims, settings).class_count
    else:
        counts["brute"] = None
    if counts["burnside"] is None and counts["brute"] is None:
        raise click.ClickException(f"no oracle can check {dims}")
    if generic:
        if dims.cells <= settings.verify_brute_max_mn:
            counts["generic"] = run_sieve(matrix_universe(dims, settings), ClosureMode.LAYERED).class_count
        else:
            counts["generic"] = None

    computed = {v for v in counts.values() if v is not None}
    status = "ok" if len(computed) == 1 else "MISMATCH"
    fields = " ".join(f"{k}={'skipped' if v is None else v}" for k, v in counts.items())
    click.echo(f"{fields} status={status}")
    if status != "ok":
        ctx.exit(2)


@mdsieve.command()
@click.option("--limit", type=int, required=True, help="largest number to test")
@reports_errors
def primes(limit: int) -> None:
    """Print the primes up to LIMIT with the sieve of Eratosthenes"""
    for p in sieve_primes(limit):
        click.echo(p)


@mdsieve.command()
@dims_options
@click.option(
    "--formatter",
    type=click.Choice(["plain", "json", "yaml"], case_sensitive=False),
    default="plain",
    help="the format of the output",
)
@reports_errors
def burnside(rows: int, cols: int, formatter: str) -> None:
    """Print the fixed-point count of every shift and the resulting class count"""
    breakdown = burnside_count(Dims(rows, cols))
    name = OutputFormat.TUPLE.value if formatter.lower() == "plain" else formatter
    click.echo(get_formatter(name).format_breakdown(breakdown), nl=False)
