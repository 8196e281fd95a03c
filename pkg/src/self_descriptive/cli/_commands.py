"""
Module :mod:`cli._commands`

This module implements the command line interface ``self-descriptive`` with the
subcommands

- ``generate``: the letters of ``u`` or its runs
- ``theory``: the theoretical frequencies and the spectrum as JSON
- ``freq``: the convergence of the empirical frequencies of ``u`` and ``δ``
- ``blocks``: the count vectors of the blocks and their residuals
- ``cut``: the cutting of ``u`` into a block prefix and the suffix ``g_n``
- ``sweep``: theory and measurement for all pairs of director words up to a period

The exit code is 0 on success, 2 for invalid arguments, and 3 if the output cannot be
written.

"""

# === Imports ===

import logging
from typing import Optional, Tuple

import click
import numpy as np

from .. import __version__
from ..analysis import (
    MAX_SWEEP_PERIOD,
    cut_sequence,
    default_checkpoints,
    directing_empirical,
    empirical_frequency,
    sweep,
    with_decay,
)
from ..blocks import MAX_BLOCK_LETTERS, block_decompose, residual_table
from ..generator import init_generator, iter_run_events, take_letters
from ..spectral import build_matrices, perron, theoretical_frequencies
from ..words import DirectorWord, densities, get_validated_checkpoints
from ._output import (
    format_bool,
    format_float,
    format_fraction,
    open_output,
    round_float,
    write_csv,
    write_json,
)
from ._params import CheckpointsParam, CountParam, DirectorWordParam

# === Constants ===

# the largest count that fits into the 64-bit counters
MAX_COUNT = 2**63 - 1

# the number of letters written per chunk by ``generate``
_CHUNK_LETTERS = 1 << 20

MAX_BLOCK_LEVELS = 60
MIN_FREQ_LETTERS = 1_000
MIN_SWEEP_LETTERS = 100_000

_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

_DIRECTOR = DirectorWordParam()

# === Auxiliary Functions ===


def _configure_logging(verbosity: int) -> None:
    """
    Routes the log records of the package to the standard error.

    """

    package_logger = logging.getLogger(__package__.rpartition(".")[0])
    package_logger.setLevel(_LOG_LEVELS[min(verbosity, len(_LOG_LEVELS) - 1)])
    if not package_logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_LOG_FORMAT))
        package_logger.addHandler(handler)


def _checkpoints_or_default(
    checkpoints: Optional[Tuple[int, ...]],
    n: int,
) -> Tuple[int, ...]:
    """
    Validates the checkpoints against ``n`` or falls back to the default schedule.

    """

    if checkpoints is None:
        return default_checkpoints(n)

    try:
        return get_validated_checkpoints(checkpoints=checkpoints, n=n)
    except ValueError as error:
        raise click.BadParameter(str(error), param_hint="'--checkpoints'") from error


def _director_options(func):
    """
    Adds the options ``--t1`` and ``--t2`` for the director words.

    """

    func = click.option(
        "--t2",
        "x2",
        type=_DIRECTOR,
        required=True,
        help="Director word for the runs of length 2, e.g., 1.",
    )(func)
    func = click.option(
        "--t1",
        "x1",
        type=_DIRECTOR,
        required=True,
        help="Director word for the runs of length 1, e.g., 12.",
    )(func)
    return func


_out_option = click.option(
    "--out",
    "out",
    type=click.Path(dir_okay=False, allow_dash=True),
    default="-",
    show_default=True,
    help="Output file; '-' is the standard output.",
)

# === Commands ===


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="self-descriptive")
@click.option(
    "-v",
    "--verbose",
    count=True,
    help="Log to the standard error; repeat for more detail.",
)
def cli(verbose: int) -> None:
    """
    Self-descriptive sequences over {1, 2} directed by two periodic words.

    """

    if verbose > 0:
        _configure_logging(verbose)


@cli.command()
@_director_options
@click.option(
    "--n",
    "n",
    type=CountParam(minimum=2, maximum=MAX_COUNT),
    required=True,
    help="Number of letters, e.g., 1e6.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["raw", "runs"]),
    default="raw",
    show_default=True,
    help="Letters as text or runs as CSV.",
)
@_out_option
def generate(
    x1: DirectorWord,
    x2: DirectorWord,
    n: int,
    output_format: str,
    out: str,
) -> None:
    """
    Generates the first N letters of the sequence.

    """

    state = init_generator(x1=x1, x2=x2)
    with open_output(out) as stream:
        if output_format == "runs":
            write_csv(
                stream,
                header=("k", "length", "letter", "start", "source"),
                rows=(
                    (
                        event.run_index,
                        event.length,
                        event.letter,
                        event.start_position,
                        event.source.value,
                    )
                    for event in iter_run_events(state, n_letters=n)
                ),
            )
            return

        remaining = n
        while remaining > 0:
            chunk = take_letters(state, n=min(remaining, _CHUNK_LETTERS))
            stream.write((chunk.astype(np.uint8) + ord("0")).tobytes().decode("ascii"))
            remaining -= chunk.size

        stream.write("\n")


@cli.command()
@_director_options
@_out_option
def theory(x1: DirectorWord, x2: DirectorWord, out: str) -> None:
    """
    Reports the theoretical frequencies and the spectrum as JSON.

    """

    pair_densities = densities(x1=x1, x2=x2)
    spectrum = perron(build_matrices(pair_densities))
    frequencies = theoretical_frequencies(pair_densities)

    with open_output(out) as stream:
        write_json(
            stream,
            {
                "t1": str(x1),
                "t2": str(x2),
                "p1": format_fraction(pair_densities.p1),
                "q2": format_fraction(pair_densities.q2),
                "delta": round_float(float(spectrum.delta)),
                "delta_rational": format_fraction(spectrum.delta),
                "alpha1": round_float(spectrum.alpha1),
                "alpha2": round_float(spectrum.alpha2),
                "f1": round_float(frequencies.f1),
                "f2": round_float(frequencies.f2),
                "dfreq": round_float(frequencies.dfreq),
                "primitive": spectrum.primitive,
            },
        )


@cli.command()
@_director_options
@click.option(
    "--n",
    "n",
    type=CountParam(minimum=MIN_FREQ_LETTERS, maximum=MAX_COUNT),
    required=True,
    help="Number of letters of u and of runs of δ, e.g., 1e7.",
)
@click.option(
    "--checkpoints",
    type=CheckpointsParam(),
    default=None,
    help="Comma-separated prefix lengths, e.g., 1e3,1e5. Defaults to powers of 10.",
)
@_out_option
def freq(
    x1: DirectorWord,
    x2: DirectorWord,
    n: int,
    checkpoints: Optional[Tuple[int, ...]],
    out: str,
) -> None:
    """
    Reports the convergence of the empirical frequencies of the letter 1.

    """

    checkpoints = _checkpoints_or_default(checkpoints=checkpoints, n=n)
    reports = (
        with_decay(empirical_frequency(x1, x2, n=n, checkpoints=checkpoints)),
        with_decay(directing_empirical(x1, x2, runs=n, checkpoints=checkpoints)),
    )

    with open_output(out) as stream:
        write_csv(
            stream,
            header=("n", "count1", "emp", "theory", "err", "series", "decay"),
            rows=(
                (
                    row.n,
                    row.count1,
                    format_float(row.emp),
                    format_float(row.theory),
                    format_float(row.err),
                    row.series,
                    format_float(row.decay),
                )
                for report in reports
                for row in report
            ),
        )


@cli.command()
@_director_options
@click.option(
    "--levels",
    type=click.IntRange(min=1, max=MAX_BLOCK_LEVELS),
    default=10,
    show_default=True,
    help="Number of block levels.",
)
@click.option(
    "--words",
    is_flag=True,
    help=f"Spell out the blocks over a, b, c, d (at most {MAX_BLOCK_LETTERS} letters).",
)
@_out_option
def blocks(
    x1: DirectorWord,
    x2: DirectorWord,
    levels: int,
    words: bool,
    out: str,
) -> None:
    """
    Reports the count vectors of the blocks and their residuals.

    """

    table = residual_table(x1=x1, x2=x2, levels=levels)
    spelled = None
    if words:
        try:
            spelled = [block.word for block in block_decompose(x1, x2, levels=levels)]
        except ValueError as error:
            raise click.BadParameter(str(error), param_hint="'--levels'") from error

    header = ["n", "length", "n_a", "n_b", "n_c", "n_d", "e_a", "e_b", "e_c", "e_d"]
    if spelled is not None:
        header.append("word")

    rows = []
    for block, e_n in table:
        row = [block.level, block.length, *block.v.as_tuple()]
        if e_n is None:
            row.extend([""] * 4)
        else:
            row.extend(format_fraction(component) for component in e_n)

        if spelled is not None:
            row.append(spelled[block.level])

        rows.append(row)

    with open_output(out) as stream:
        write_csv(stream, header=header, rows=rows)


@cli.command()
@_director_options
@click.option(
    "--n",
    "n",
    type=CountParam(minimum=MIN_FREQ_LETTERS, maximum=MAX_COUNT),
    required=True,
    help="Number of letters, e.g., 1e6.",
)
@click.option(
    "--checkpoints",
    type=CheckpointsParam(),
    default=None,
    help="Comma-separated prefix lengths. Defaults to powers of 10.",
)
@_out_option
def cut(
    x1: DirectorWord,
    x2: DirectorWord,
    n: int,
    checkpoints: Optional[Tuple[int, ...]],
    out: str,
) -> None:
    """
    Reports the cut of the sequence into a block prefix and the suffix g_n.

    The first row is the position 0 and the row of a checkpoint N is the position
    N - 1, i.e., it covers the first N letters.

    """

    checkpoints = _checkpoints_or_default(checkpoints=checkpoints, n=n)
    positions = [0] + [checkpoint - 1 for checkpoint in checkpoints if checkpoint > 1]
    states = cut_sequence(x1, x2, n=n, positions=positions)

    with open_output(out) as stream:
        write_csv(
            stream,
            header=("n", "l", "prefix_len", "g_len", "g_count1", "g_freq"),
            rows=(
                (
                    state.n,
                    state.l,
                    state.prefix_len,
                    state.g_len,
                    state.g_count1,
                    format_float(state.g_freq),
                )
                for state in states
            ),
        )


@cli.command("sweep")
@click.option(
    "--max-period",
    "max_period",
    type=click.IntRange(min=1, max=MAX_SWEEP_PERIOD),
    required=True,
    help="Maximum period of the director words.",
)
@click.option(
    "--n",
    "n",
    type=CountParam(minimum=MIN_SWEEP_LETTERS, maximum=MAX_COUNT),
    default=str(MIN_SWEEP_LETTERS),
    show_default=True,
    help="Number of letters per pair.",
)
@click.option(
    "--jobs",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Number of worker processes.",
)
@click.option("--progress", is_flag=True, help="Show a progress bar.")
@_out_option
def sweep_command(
    max_period: int,
    n: int,
    jobs: int,
    progress: bool,
    out: str,
) -> None:
    """
    Compares theory and measurement for all pairs of director words.

    """

    rows = sweep(max_period=max_period, n=n, jobs=jobs, progress=progress)

    with open_output(out) as stream:
        write_csv(
            stream,
            header=(
                "x1",
                "x2",
                "p1",
                "q2",
                "f1_theory",
                "f1_emp",
                "err",
                "alpha1",
                "alpha2",
                "primitive",
            ),
            rows=(
                (
                    row.x1,
                    row.x2,
                    format_fraction(row.p1),
                    format_fraction(row.q2),
                    format_float(row.f1_theory),
                    format_float(row.f1_emp),
                    format_float(row.err),
                    format_float(row.alpha1),
                    format_float(row.alpha2),
                    format_bool(row.primitive),
                )
                for row in rows
            ),
        )


def main() -> None:
    """
    Entry point of the ``self-descriptive`` console script.

    """

    cli(prog_name="self-descriptive")
