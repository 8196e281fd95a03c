"""
Module :mod:`generator._numpy_funcs`

This module provides the pure Python/NumPy implementation of the run expansion kernel.
It is written in the subset of Python that Numba can compile in ``nopython`` mode, so
the very same source is compiled in :mod:`generator._numba_funcs` if Numba is
available.

"""

# === Imports ===

from typing import Tuple

import numpy as np

# === Functions ===


def _expand_runs(
    window: np.ndarray,
    window_base: int,
    read_index: int,
    frontier: int,
    t1: np.ndarray,
    cursor_t1: int,
    t2: np.ndarray,
    cursor_t2: int,
    count1: int,
    dcount1: int,
    runs1: int,
    stop_frontier: int,
    stop_read_index: int,
    letters_out: np.ndarray,
    letters_offset: int,
    delta_out: np.ndarray,
    delta_offset: int,
) -> Tuple[int, int, int, int, int, int, int]:
    """
    Expands runs of the self-descriptive sequence ``u`` one after another by reading
    ``u`` at ``read_index`` and appending the run it describes at ``frontier``.

    Parameters
    ----------
    window : :class:`numpy.ndarray` of shape (m,) of dtype ``np.uint8``
        The bit-packed letters of ``u``. Bit ``i`` (least significant bit first) stands
        for the position ``window_base + i`` and is set if and only if the letter is 2.
        Bits beyond ``frontier`` have to be cleared.
    window_base : :class:`int`
        The position of ``u`` stored in the first bit of ``window``. It is a multiple
        of 8.
    read_index : :class:`int`
        The next position of ``u`` to be read.
    frontier : :class:`int`
        The number of letters of ``u`` produced so far.
    t1, t2 : :class:`numpy.ndarray` of dtype ``np.int8``
        The director words that are consumed cyclically by runs of length 1 (``t1``)
        and of length 2 (``t2``).
    cursor_t1, cursor_t2 : :class:`int`
        The positions of the next letters within ``t1`` and ``t2``.
    count1 : :class:`int`
        The number of 1s among the letters produced so far.
    dcount1 : :class:`int`
        The number of 1s in the directing sequence among the runs expanded so far.
    runs1 : :class:`int`
        The number of expanded runs of length 1.
    stop_frontier, stop_read_index : :class:`int`
        The expansion stops as soon as ``frontier >= stop_frontier`` or
        ``read_index >= stop_read_index``.
    letters_out : :class:`numpy.ndarray` of dtype ``np.int8``
        The letter at position ``p`` is written to ``letters_out[p - letters_offset]``
        whenever this index is valid. Pass an empty array to skip recording.
    letters_offset : :class:`int`
        See ``letters_out``.
    delta_out : :class:`numpy.ndarray` of dtype ``np.int8``
        The letter of run ``k`` is written to ``delta_out[k - delta_offset]`` whenever
        this index is valid. Pass an empty array to skip recording.
    delta_offset : :class:`int`
        See ``delta_out``.

    Returns
    -------
    read_index, frontier, cursor_t1, cursor_t2, count1, dcount1, runs1 : :class:`int`
        The updated scalar state.

    Notes
    -----
    The expansion also stops when the window cannot take another run of length 2. The
    caller then has to compact or grow the window and call the kernel again.

    """

    limit = window_base + window.size * 8 - 2
    period_t1 = t1.size
    period_t2 = t2.size
    num_letters_out = letters_out.size
    num_delta_out = delta_out.size

    while (
        frontier < stop_frontier and read_index < stop_read_index and frontier <= limit
    ):
        # the letter at the read index decides which director feeds the run
        offset = read_index - window_base
        if ((window[offset >> 3] >> (offset & 7)) & 1) == 0:
            letter = t1[cursor_t1]
            cursor_t1 += 1
            if cursor_t1 == period_t1:
                cursor_t1 = 0

            length = 1
            runs1 += 1

        else:
            letter = t2[cursor_t2]
            cursor_t2 += 1
            if cursor_t2 == period_t2:
                cursor_t2 = 0

            length = 2

        # the run is appended
        for _ in range(length):
            if letter == 1:
                count1 += 1
            else:
                offset = frontier - window_base
                window[offset >> 3] |= 1 << (offset & 7)

            index = frontier - letters_offset
            if 0 <= index < num_letters_out:
                letters_out[index] = letter

            frontier += 1

        # the letter of the run is the next letter of the directing sequence
        if letter == 1:
            dcount1 += 1

        index = read_index - delta_offset
        if 0 <= index < num_delta_out:
            delta_out[index] = letter

        read_index += 1

    return read_index, frontier, cursor_t1, cursor_t2, count1, dcount1, runs1
