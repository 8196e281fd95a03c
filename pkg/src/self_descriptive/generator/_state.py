"""
Module :mod:`generator._state`

This module implements the streaming engine that produces a self-descriptive sequence
``u`` over ``{1, 2}`` and its directing sequence ``δ`` run by run from two cyclic
director words ``T1 = (x1)^ω`` and ``T2 = (x2)^ω``.

Starting from the seed ``u0 = u1 = 2`` and ``δ0 = 2``, the letter ``u_k`` is read for
``k = 1, 2, ...``; if it is 1, the next letter ``c`` of ``T1`` is appended once,
otherwise the next letter ``c`` of ``T2`` is appended twice, and ``δ_k = c``.

Only the letters that were produced but not yet read are kept, packed with 1 bit per
letter, so the memory grows with the gap between the read index and the frontier which
is a fraction of the number of letters produced.

"""

# === Imports ===

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

import numpy as np

from ..words import DirectorWord, as_director, get_validated_count
from ._numba_funcs import nb_expand_runs

# === Constants ===

# the seed of every sequence: u0 = u1 = 2 and δ0 = 2
SEED_LETTER = 2
SEED_LENGTH = 2

# the initial size of the bit-packed window in bytes
INITIAL_WINDOW_BYTES = 1 << 12

# a stop value that is never reached
_UNBOUNDED = 1 << 62

# an output array that makes the kernel skip recording
_NO_OUTPUT = np.empty(0, dtype=np.int8)

logger = logging.getLogger(__name__)

# === Exceptions ===


class StreamConsumptionError(RuntimeError):
    """
    Exception raised when a :class:`GeneratorState` is consumed in a way that would
    require letters that were already discarded.

    """

    pass


# === Models ===


class RunSource(str, Enum):
    """
    Specifies which director fed a run.

    """

    SEED = "SEED"
    T1 = "T1"
    T2 = "T2"


class StreamConsumer(str, Enum):
    """
    Specifies how a :class:`GeneratorState` is consumed. A state serves exactly one kind
    of consumer.

    """

    LETTERS = "letters"
    RUNS = "runs"
    COUNTS = "counts"


@dataclass(frozen=True)
class RunEvent:
    """
    One run ``δ_k^{u_k}`` of the self-descriptive sequence.

    Attributes
    ----------
    run_index : :class:`int`
        The index ``k`` of the run.
    length : :class:`int`
        The length ``u_k`` of the run, 1 or 2.
    letter : :class:`int`
        The letter ``δ_k`` the run consists of, 1 or 2.
    start_position : :class:`int`
        The position of the first letter of the run in ``u``.
    source : :class:`RunSource`
        ``SEED`` for ``k = 0``, ``T1`` for runs of length 1, and ``T2`` for runs of
        length 2.

    """

    run_index: int
    length: int
    letter: int
    start_position: int
    source: RunSource

    @property
    def end_position(self) -> int:
        return self.start_position + self.length


@dataclass
class GeneratorState:
    """
    The mutable state of the streaming engine. It is owned by a single consumer and
    must only be created by :func:`init_generator`.

    Attributes
    ----------
    x1, x2 : :class:`DirectorWord`
        The director words of ``T1`` and ``T2``.
    t1, t2 : :class:`numpy.ndarray` of dtype ``np.int8``
        The letters of ``x1`` and ``x2`` as consumed by the kernel.
    read_index : :class:`int`
        The next position of ``u`` to be read, i.e., the index of the next run to be
        expanded.
    frontier : :class:`int`
        The number of letters of ``u`` produced so far.
    window : :class:`numpy.ndarray` of dtype ``np.uint8``
        The bit-packed letters from ``window_base`` to ``frontier - 1``; a set bit
        stands for the letter 2.
    window_base : :class:`int`
        The position of the first bit of ``window``, a multiple of 8 that never
        exceeds ``read_index``.
    cursor_t1, cursor_t2 : :class:`int`
        The positions of the next letters within ``x1`` and ``x2``.
    count1, count2 : :class:`int`
        The numbers of 1s and 2s among the letters produced so far.
    dcount1 : :class:`int`
        The number of 1s in ``δ_0 ... δ_{read_index - 1}``.
    runs1 : :class:`int`
        The number of expanded runs of length 1, i.e., of letters consumed from ``T1``.
    letters_delivered : :class:`int`
        The number of letters of ``u`` handed out by :func:`take_letters`.
    seed_delivered : :class:`bool`
        Whether the seed run was handed out by :func:`next_run` or
        :func:`delta_prefix`.
    consumer : :class:`StreamConsumer` or ``None``
        The kind of consumption the state is claimed by.

    """

    x1: DirectorWord
    x2: DirectorWord
    t1: np.ndarray
    t2: np.ndarray
    window: np.ndarray
    read_index: int = 1
    frontier: int = SEED_LENGTH
    window_base: int = 0
    cursor_t1: int = 0
    cursor_t2: int = 0
    count1: int = 0
    count2: int = SEED_LENGTH
    dcount1: int = 0
    runs1: int = 0
    letters_delivered: int = 0
    seed_delivered: bool = False
    consumer: Optional[StreamConsumer] = None

    @property
    def window_size(self) -> int:
        """
        The number of letters between the read index and the frontier.

        """

        return self.frontier - self.read_index

    @property
    def runs2(self) -> int:
        """
        The number of expanded runs of length 2 after the seed, i.e., of letters
        consumed from ``T2``.

        """

        return self.read_index - 1 - self.runs1


# === Auxiliary Functions ===


def _claim(state: GeneratorState, consumer: StreamConsumer) -> None:
    """
    Claims the state for the given kind of consumer.

    """

    if state.consumer is None:
        state.consumer = consumer
        return

    if state.consumer is not consumer:
        raise StreamConsumptionError(
            f"The generator state is already consumed as '{state.consumer.value}' and "
            f"cannot be consumed as '{consumer.value}'; use a fresh state instead."
        )


def _retain_from(state: GeneratorState) -> int:
    """
    The smallest position of ``u`` that still has to be kept in the window.

    """

    if state.consumer is StreamConsumer.LETTERS:
        return min(state.read_index, state.letters_delivered)

    return state.read_index


def _compact_window(state: GeneratorState) -> None:
    """
    Discards the letters that are no longer needed from the window and doubles its
    size if less than half of it would be free afterwards.

    """

    keep_from = (_retain_from(state) >> 3) << 3
    num_kept = state.frontier - keep_from
    capacity = state.window.size * 8
    new_capacity = capacity
    while 2 * (num_kept + SEED_LENGTH) > new_capacity:
        new_capacity *= 2

    start_byte = (keep_from - state.window_base) >> 3
    stop_byte = (state.frontier - state.window_base + 7) >> 3
    num_kept_bytes = stop_byte - start_byte

    # only the old and the new window are alive at the same time
    if new_capacity != capacity:
        logger.debug(
            "Growing the window from %d to %d bits at frontier %d.",
            capacity,
            new_capacity,
            state.frontier,
        )
        window = np.zeros(new_capacity // 8, dtype=np.uint8)
        window[:num_kept_bytes] = state.window[start_byte:stop_byte]
        state.window = window

    else:
        state.window[:num_kept_bytes] = state.window[start_byte:stop_byte]
        state.window[num_kept_bytes:] = 0

    state.window_base = keep_from


def _advance(
    state: GeneratorState,
    stop_frontier: int = _UNBOUNDED,
    stop_read_index: int = _UNBOUNDED,
    letters_out: np.ndarray = _NO_OUTPUT,
    letters_offset: int = 0,
    delta_out: np.ndarray = _NO_OUTPUT,
    delta_offset: int = 0,
) -> None:
    """
    Expands runs until ``frontier >= stop_frontier`` or
    ``read_index >= stop_read_index`` while keeping the window large enough.

    """

    while state.frontier < stop_frontier and state.read_index < stop_read_index:
        if state.frontier > state.window_base + state.window.size * 8 - SEED_LENGTH:
            _compact_window(state)

        (
            state.read_index,
            state.frontier,
            state.cursor_t1,
            state.cursor_t2,
            state.count1,
            state.dcount1,
            state.runs1,
        ) = nb_expand_runs(
            state.window,
            state.window_base,
            state.read_index,
            state.frontier,
            state.t1,
            state.cursor_t1,
            state.t2,
            state.cursor_t2,
            state.count1,
            state.dcount1,
            state.runs1,
            stop_frontier,
            stop_read_index,
            letters_out,
            letters_offset,
            delta_out,
            delta_offset,
        )

    state.count2 = state.frontier - state.count1


def window_letters(state: GeneratorState, start: int, stop: int) -> np.ndarray:
    """
    Returns the letters of ``u`` at the positions ``start`` to ``stop - 1`` that are
    still held by the window.

    Raises
    ------
    StreamConsumptionError
        If a requested position was already discarded or not yet produced.

    """

    if start < state.window_base or stop > state.frontier:
        raise StreamConsumptionError(
            f"The positions [{start}, {stop}) are not held by the window which covers "
            f"[{state.window_base}, {state.frontier})."
        )

    offset_start = start - state.window_base
    offset_stop = stop - state.window_base
    bits = np.unpackbits(
        state.window[offset_start >> 3 : (offset_stop + 7) >> 3],
        bitorder="little",
    )
    skip = offset_start & 7
    return (bits[skip : skip + stop - start] + 1).astype(np.int8)


def window_count1(state: GeneratorState) -> int:
    """
    Counts the 1s among the letters that were produced but not yet read, i.e., at the
    positions ``read_index`` to ``frontier - 1``.

    """

    letters = window_letters(state, start=state.read_index, stop=state.frontier)
    return int(np.count_nonzero(letters == 1))


# === Main Functions ===


def init_generator(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    window_bytes: int = INITIAL_WINDOW_BYTES,
) -> GeneratorState:
    """
    Creates a fresh generator state for the sequence directed by ``T1 = (x1)^ω`` and
    ``T2 = (x2)^ω``.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    window_bytes : :class:`int`, default=``4096``
        The initial size of the bit-packed window in bytes. The window grows on
        demand.

    Returns
    -------
    state : :class:`GeneratorState`
        The state holding the seed ``u0 = u1 = 2`` with the read index at 1.

    """

    x1, x2 = as_director(x1), as_director(x2)
    window_bytes = get_validated_count(
        value=window_bytes,
        name="window_bytes",
        minimum=1,
    )

    window = np.zeros(window_bytes, dtype=np.uint8)
    # both seed letters are 2
    window[0] = 0b11

    return GeneratorState(
        x1=x1,
        x2=x2,
        t1=x1.as_array(),
        t2=x2.as_array(),
        window=window,
    )


def next_run(state: GeneratorState) -> RunEvent:
    """
    Expands the next run and returns it. The first call returns the seed run
    ``δ_0^{u_0} = 2^2``.

    Parameters
    ----------
    state : :class:`GeneratorState`
        The state, consumed as a run stream.

    Returns
    -------
    event : :class:`RunEvent`
        The run.

    Raises
    ------
    StreamConsumptionError
        If the state is already consumed as a letter stream or for counting.

    """

    _claim(state, StreamConsumer.RUNS)
    if not state.seed_delivered:
        state.seed_delivered = True
        return RunEvent(
            run_index=0,
            length=SEED_LENGTH,
            letter=SEED_LETTER,
            start_position=0,
            source=RunSource.SEED,
        )

    run_index = state.read_index
    start_position = state.frontier
    _advance(state, stop_read_index=run_index + 1)

    length = state.frontier - start_position
    letters = window_letters(state, start=start_position, stop=start_position + 1)
    letter = int(letters[0])
    return RunEvent(
        run_index=run_index,
        length=length,
        letter=letter,
        start_position=start_position,
        source=RunSource.T1 if length == 1 else RunSource.T2,
    )


def iter_run_events(state: GeneratorState, n_letters: int) -> Iterator[RunEvent]:
    """
    Yields the runs that start before the position ``n_letters``, i.e., the runs that
    make up the prefix ``u_0 ... u_{n_letters - 1}``.

    """

    n_letters = get_validated_count(value=n_letters, name="n_letters")
    _claim(state, StreamConsumer.RUNS)
    while (state.frontier if state.seed_delivered else 0) < n_letters:
        yield next_run(state)


def take_letters(state: GeneratorState, n: int) -> np.ndarray:
    """
    Returns the next ``n`` letters of ``u``, advancing the engine as needed. On a fresh
    state, these are the letters ``u_0 ... u_{n - 1}``; consecutive calls continue
    where the previous call stopped.

    Parameters
    ----------
    state : :class:`GeneratorState`
        The state, consumed as a letter stream.
    n : :class:`int`
        The number of letters ``>= 0``.

    Returns
    -------
    letters : :class:`numpy.ndarray` of shape (n,) of dtype ``np.int8``
        The letters, each being 1 or 2.

    Raises
    ------
    StreamConsumptionError
        If the state is already consumed as a run stream or for counting.

    """

    n = get_validated_count(value=n, name="n")
    _claim(state, StreamConsumer.LETTERS)

    letters = np.empty(n, dtype=np.int8)
    start = state.letters_delivered
    stop = start + n

    # the letters that were produced by an earlier call but not handed out
    num_pending = max(0, min(state.frontier, stop) - start)
    if num_pending > 0:
        letters[:num_pending] = window_letters(
            state,
            start=start,
            stop=start + num_pending,
        )

    _advance(
        state,
        stop_frontier=stop,
        letters_out=letters,
        letters_offset=start,
    )
    state.letters_delivered = stop

    return letters


def delta_prefix(state: GeneratorState, n: int) -> np.ndarray:
    """
    Returns the next ``n`` letters of the directing sequence ``δ``, one per run. On a
    fresh state, these are ``δ_0 ... δ_{n - 1}``.

    Parameters
    ----------
    state : :class:`GeneratorState`
        The state, consumed as a run stream, i.e., it may be mixed with
        :func:`next_run`.
    n : :class:`int`
        The number of runs ``>= 0``.

    Returns
    -------
    delta : :class:`numpy.ndarray` of shape (n,) of dtype ``np.int8``
        The letters of the runs.

    """

    n = get_validated_count(value=n, name="n")
    _claim(state, StreamConsumer.RUNS)

    delta = np.empty(n, dtype=np.int8)
    if n == 0:
        return delta

    num_seed = 0
    if not state.seed_delivered:
        delta[0] = SEED_LETTER
        state.seed_delivered = True
        num_seed = 1

    offset = state.read_index - num_seed
    _advance(
        state,
        stop_read_index=offset + n,
        delta_out=delta,
        delta_offset=offset,
    )

    return delta


def count_letters(state: GeneratorState, n: int) -> int:
    """
    Counts the 1s in ``u_0 ... u_{n - 1}`` without materialising the letters.

    Parameters
    ----------
    state : :class:`GeneratorState`
        The state, consumed for counting. Successive calls require non-decreasing
        ``n``.
    n : :class:`int`
        The length of the prefix ``>= 0``.

    Returns
    -------
    count1 : :class:`int`
        The number of 1s in the prefix.

    Raises
    ------
    StreamConsumptionError
        If the engine already advanced beyond the prefix.

    """

    n = get_validated_count(value=n, name="n")
    _claim(state, StreamConsumer.COUNTS)
    if n == 0:
        return 0

    if n < state.frontier - 1:
        raise StreamConsumptionError(
            f"Cannot count the prefix of length {n} since the engine is already at "
            f"frontier {state.frontier}."
        )

    _advance(state, stop_frontier=n)
    if state.frontier == n:
        return state.count1

    # the last run overshot the prefix by one letter
    overshoot = window_letters(state, start=n, stop=n + 1)[0]
    return state.count1 - int(overshoot == 1)


def count_directing(state: GeneratorState, n: int) -> int:
    """
    Counts the 1s in ``δ_0 ... δ_{n - 1}`` without materialising the runs.

    Parameters
    ----------
    state : :class:`GeneratorState`
        The state, consumed for counting. Successive calls require non-decreasing
        ``n``.
    n : :class:`int`
        The number of runs ``>= 0``.

    Returns
    -------
    dcount1 : :class:`int`
        The number of runs of letter 1.

    Raises
    ------
    StreamConsumptionError
        If the engine already expanded more than ``n`` runs.

    """

    n = get_validated_count(value=n, name="n")
    _claim(state, StreamConsumer.COUNTS)
    if n == 0:
        return 0

    if n < state.read_index:
        raise StreamConsumptionError(
            f"Cannot count the first {n} runs since the engine already expanded "
            f"{state.read_index} runs."
        )

    _advance(state, stop_read_index=n)
    return state.dcount1
