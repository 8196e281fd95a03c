"""
Module :mod:`cli._output`

This module implements the output formats of the command line interface. Numbers are
written with 12 significant digits and rationals as ``num/den``; CSV files use the
comma as separator and LF line endings.

"""

# === Imports ===

import csv
import json
import math
from contextlib import contextmanager
from fractions import Fraction
from typing import IO, Any, Dict, Iterable, Iterator, Optional, Sequence

import click

# === Constants ===

SIGNIFICANT_DIGITS = 12

# === Exceptions ===


class OutputError(click.ClickException):
    """
    Exception raised when the output cannot be written. It makes the command line
    interface exit with the code 3.

    """

    exit_code = 3


# === Functions ===


def format_float(value: Optional[float]) -> str:
    """
    Formats a number with 12 significant digits; ``None`` and ``nan`` become empty.

    """

    if value is None or math.isnan(value):
        return ""

    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def round_float(value: float) -> float:
    """
    Rounds a number to 12 significant digits for JSON output.

    """

    return float(format_float(value))


def format_fraction(value: Fraction) -> str:
    """
    Formats a rational as ``num/den``.

    """

    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_bool(value: bool) -> str:
    return "true" if value else "false"


@contextmanager
def open_output(path: str) -> Iterator[IO[str]]:
    """
    Opens the output for writing where ``-`` stands for the standard output.

    Raises
    ------
    OutputError
        If the output cannot be opened or written.

    """

    try:
        with click.open_file(path, mode="w", encoding="utf-8", lazy=False) as stream:
            yield stream

    except OSError as error:
        raise OutputError(f"Cannot write to {path!r}: {error}") from error


def write_csv(
    stream: IO[str],
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
) -> None:
    """
    Writes a CSV table with a mandatory header row.

    """

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_json(stream: IO[str], content: Dict[str, Any]) -> None:
    stream.write(json.dumps(content, indent=2))
    stream.write("\n")
