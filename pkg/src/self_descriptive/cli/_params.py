"""
Module :mod:`cli._params`

This module implements the ``click`` parameter types of the command line interface:

- director words like ``121``
- counts that may be given in scientific notation like ``1e8``
- comma-separated lists of such counts

"""

# === Imports ===

import math
from typing import Any, Optional, Tuple

import click

from ..words import DirectorWord, DirectorWordError, parse_director

# === Classes ===


class DirectorWordParam(click.ParamType):
    """
    A director word over ``{1, 2}``, e.g., ``121``.

    """

    name = "word"

    def convert(
        self,
        value: Any,
        param: Optional[click.Parameter],
        ctx: Optional[click.Context],
    ) -> DirectorWord:
        if isinstance(value, DirectorWord):
            return value

        try:
            return parse_director(str(value))
        except DirectorWordError as error:
            self.fail(str(error), param, ctx)


def parse_count(text: str) -> int:
    """
    Parses a non-negative integer count that may be written in scientific notation,
    e.g., ``"1e8"``.

    Raises
    ------
    ValueError
        If the text is not an integral, finite, non-negative number.

    """

    text = text.strip()
    try:
        return _non_negative(int(text), text=text)
    except ValueError:
        pass

    number = float(text)
    if not math.isfinite(number) or not number.is_integer():
        raise ValueError(f"Expected an integral count but got {text!r}.")

    return _non_negative(int(number), text=text)


def _non_negative(count: int, text: str) -> int:
    if count < 0:
        raise ValueError(f"Expected a non-negative count but got {text!r}.")

    return count


class CountParam(click.ParamType):
    """
    A count that may be given in scientific notation, e.g., ``1e8``.

    Parameters
    ----------
    minimum : :class:`int`, default=``0``
        The smallest admissible count.
    maximum : :class:`int` or ``None``, default=``None``
        The largest admissible count.

    """

    name = "count"

    def __init__(self, minimum: int = 0, maximum: Optional[int] = None) -> None:
        self.minimum = minimum
        self.maximum = maximum

    def convert(
        self,
        value: Any,
        param: Optional[click.Parameter],
        ctx: Optional[click.Context],
    ) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            count = value
        else:
            try:
                count = parse_count(str(value))
            except ValueError as error:
                self.fail(str(error), param, ctx)

        if count < self.minimum:
            self.fail(
                f"Expected a count >= {self.minimum} but got {count}.",
                param,
                ctx,
            )

        if self.maximum is not None and count > self.maximum:
            self.fail(
                f"Expected a count <= {self.maximum} but got {count}.",
                param,
                ctx,
            )

        return count


class CheckpointsParam(click.ParamType):
    """
    A comma-separated list of counts, e.g., ``1e3,1e4,1e5``.

    """

    name = "checkpoints"

    def convert(
        self,
        value: Any,
        param: Optional[click.Parameter],
        ctx: Optional[click.Context],
    ) -> Tuple[int, ...]:
        if isinstance(value, tuple):
            return value

        try:
            return tuple(parse_count(item) for item in str(value).split(","))
        except ValueError as error:
            self.fail(str(error), param, ctx)
