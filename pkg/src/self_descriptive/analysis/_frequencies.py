"""
Module :mod:`analysis._frequencies`

This module implements the empirical letter frequencies of self-descriptive sequences,
measured at checkpoints in a single streaming pass, and their comparison with the
theoretical frequencies.

"""

# === Imports ===

import logging
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Optional, Tuple, Union

from ..generator import (
    GeneratorState,
    count_directing,
    count_letters,
    init_generator,
    window_count1,
)
from ..spectral import theoretical_frequencies
from ..words import (
    DirectorWord,
    as_director,
    densities,
    get_validated_checkpoints,
    get_validated_count,
)

# === Constants ===

# the smallest checkpoint of the default schedule
DEFAULT_FIRST_CHECKPOINT = 1_000

SERIES_U = "u"
SERIES_DELTA = "delta"

logger = logging.getLogger(__name__)

# === Models ===


@dataclass(frozen=True)
class FrequencyRow:
    """
    The empirical frequency of the letter 1 in a prefix.

    Attributes
    ----------
    n : :class:`int`
        The length of the prefix.
    count1 : :class:`int`
        The number of 1s in the prefix.
    theory : :class:`float`
        The theoretical frequency.
    series : :class:`str`
        ``"u"`` for the sequence itself or ``"delta"`` for its directing sequence.
    decay : :class:`float` or ``None``
        The ratio of the error to the error of the previous row. ``None`` for the first
        row or if the previous error vanishes.

    Properties
    ----------
    emp : :class:`float`
        The empirical frequency ``count1 / n``.
    err : :class:`float`
        The absolute error ``|emp - theory|``.

    """

    n: int
    count1: int
    theory: float
    series: str = SERIES_U
    decay: Optional[float] = None

    @property
    def emp(self) -> float:
        return self.count1 / self.n

    @property
    def err(self) -> float:
        return abs(self.emp - self.theory)


@dataclass(frozen=True)
class FrequencyReport:
    """
    The empirical frequencies of one series at strictly increasing checkpoints.

    """

    series: str
    theory: float
    rows: Tuple[FrequencyRow, ...]

    def __iter__(self) -> Iterator[FrequencyRow]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class ConvergenceReport:
    """
    The joint empirical frequencies of ``u`` and ``δ`` with the error decay between
    consecutive checkpoints.

    """

    u: FrequencyReport
    delta: FrequencyReport

    @property
    def rows(self) -> Tuple[FrequencyRow, ...]:
        return self.u.rows + self.delta.rows


# === Auxiliary Functions ===


def _resolve_checkpoints(
    n: int,
    checkpoints: Optional[Iterable[int]],
) -> Tuple[int, ...]:
    """
    Validates the checkpoints or falls back to the default schedule.

    """

    if checkpoints is None:
        return default_checkpoints(n)

    return get_validated_checkpoints(checkpoints=checkpoints, n=n)


def _check_routing(state: GeneratorState) -> None:
    """
    Checks that the number of 1s read so far equals the number of runs of length 1
    expanded so far and that the 1s produced so far are exactly those taken from
    ``T1`` plus twice those taken from ``T2``.

    Raises
    ------
    RuntimeError
        If either of the identities is violated.

    """

    ones_read = state.count1 - window_count1(state)
    if ones_read != state.runs1:
        raise RuntimeError(
            f"Read {ones_read} letters 1 before position {state.read_index} but "
            f"expanded {state.runs1} runs of length 1."
        )

    ones_routed = state.x1.ones_in_cycle(count=state.runs1) + 2 * (
        state.x2.ones_in_cycle(count=state.runs2)
    )
    if ones_routed != state.count1:
        raise RuntimeError(
            f"Produced {state.count1} letters 1 but the directors delivered "
            f"{ones_routed} of them."
        )


# === Functions ===


def default_checkpoints(n: int) -> Tuple[int, ...]:
    """
    The powers of 10 from ``10^3`` up to ``n`` followed by ``n`` itself.

    """

    n = get_validated_count(value=n, name="n", minimum=1)
    checkpoints = []
    checkpoint = DEFAULT_FIRST_CHECKPOINT
    while checkpoint < n:
        checkpoints.append(checkpoint)
        checkpoint *= 10

    checkpoints.append(n)
    return tuple(checkpoints)


def empirical_frequency(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    n: int,
    checkpoints: Optional[Iterable[int]] = None,
) -> FrequencyReport:
    """
    Measures the frequency of the letter 1 in the prefixes of ``u`` in a single
    streaming pass.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    n : :class:`int`
        The total number of letters ``>= 1``.
    checkpoints : iterable of :class:`int` or ``None``, default=``None``
        The strictly increasing prefix lengths to report which must not exceed ``n``.
        If ``None``, the powers of 10 from ``10^3`` up to ``n`` and ``n`` itself are
        used.

    Returns
    -------
    report : :class:`FrequencyReport`
        The report with the theoretical frequency ``f1`` from the closed form.

    Raises
    ------
    RuntimeError
        If the letters 1 do not route consistently through the directors.

    """

    x1, x2 = as_director(x1), as_director(x2)
    n = get_validated_count(value=n, name="n", minimum=1)
    checkpoints = _resolve_checkpoints(n=n, checkpoints=checkpoints)
    theory = theoretical_frequencies(densities(x1=x1, x2=x2)).f1

    state = init_generator(x1=x1, x2=x2)
    rows = []
    for checkpoint in checkpoints:
        count1 = count_letters(state, n=checkpoint)
        _check_routing(state)
        rows.append(
            FrequencyRow(n=checkpoint, count1=count1, theory=theory, series=SERIES_U)
        )
        logger.info(
            "Checkpoint %d of u for (%s, %s): %d letters 1.",
            checkpoint,
            x1,
            x2,
            count1,
        )

    return FrequencyReport(series=SERIES_U, theory=theory, rows=tuple(rows))


def directing_empirical(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    runs: int,
    checkpoints: Optional[Iterable[int]] = None,
) -> FrequencyReport:
    """
    Measures the frequency of the letter 1 in the prefixes of the directing sequence
    ``δ`` in a single streaming pass. The checkpoints count runs, not letters of
    ``u``.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    runs : :class:`int`
        The total number of runs ``>= 1``.
    checkpoints : iterable of :class:`int` or ``None``, default=``None``
        See :func:`empirical_frequency`.

    Returns
    -------
    report : :class:`FrequencyReport`
        The report with the theoretical frequency from :func:`directing_freq`.

    """

    x1, x2 = as_director(x1), as_director(x2)
    runs = get_validated_count(value=runs, name="runs", minimum=1)
    checkpoints = _resolve_checkpoints(n=runs, checkpoints=checkpoints)
    theory = theoretical_frequencies(densities(x1=x1, x2=x2)).dfreq

    state = init_generator(x1=x1, x2=x2)
    rows = []
    for checkpoint in checkpoints:
        count1 = count_directing(state, n=checkpoint)
        rows.append(
            FrequencyRow(
                n=checkpoint,
                count1=count1,
                theory=theory,
                series=SERIES_DELTA,
            )
        )
        logger.info(
            "Checkpoint %d of delta for (%s, %s): %d letters 1.",
            checkpoint,
            x1,
            x2,
            count1,
        )

    return FrequencyReport(series=SERIES_DELTA, theory=theory, rows=tuple(rows))


def with_decay(report: FrequencyReport) -> FrequencyReport:
    """
    Fills in the ratios of the errors of consecutive rows.

    """

    rows = list(report.rows)
    for index in range(1, len(rows)):
        previous_err = rows[index - 1].err
        decay = rows[index].err / previous_err if previous_err > 0.0 else None
        rows[index] = replace(rows[index], decay=decay)

    return replace(report, rows=tuple(rows))


def convergence_report(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    n: int,
    checkpoints: Optional[Iterable[int]] = None,
) -> ConvergenceReport:
    """
    Measures the frequencies of the letter 1 in ``u`` (over ``n`` letters) and in
    ``δ`` (over ``n`` runs) at the same checkpoints together with the decay of their
    errors.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    n : :class:`int`
        The total number of letters and runs.
    checkpoints : iterable of :class:`int` or ``None``, default=``None``
        See :func:`empirical_frequency`. There have to be at least 2 of them.

    Returns
    -------
    report : :class:`ConvergenceReport`
        The joint report.

    Raises
    ------
    ValueError
        If there are less than 2 checkpoints.

    """

    n = get_validated_count(value=n, name="n", minimum=1)
    checkpoints = _resolve_checkpoints(n=n, checkpoints=checkpoints)
    if len(checkpoints) < 2:
        raise ValueError(
            f"Expected at least 2 checkpoints but got {len(checkpoints)}."
        )

    return ConvergenceReport(
        u=with_decay(empirical_frequency(x1, x2, n=n, checkpoints=checkpoints)),
        delta=with_decay(directing_empirical(x1, x2, runs=n, checkpoints=checkpoints)),
    )
