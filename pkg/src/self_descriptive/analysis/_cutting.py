"""
Module :mod:`analysis._cutting`

This module implements the cutting of a self-descriptive sequence ``u`` into the
growing suffixes ``g_n`` that follow a block prefix ``22 w_0 ... w_{ℓ_n - 1}``.

Starting from ``ℓ_0 = 0``, the cut index is incremented after the position ``n`` as
soon as ``|g_n| + 1 > |22 w_0 ... w_{ℓ_n}|^2``, so the block prefix grows so slowly that
``g_n`` eventually covers almost all of ``u_0 ... u_n``. The frequency of the letter 1
within ``g_n`` is therefore a diagnostic for the frequency ``f1`` of ``u``.

"""

# === Imports ===

from dataclasses import dataclass
from typing import Iterable, List, Optional, Union

import numpy as np

from ..blocks import iter_block_counts
from ..generator import SEED_LENGTH, count_letters, init_generator, take_letters
from ..words import DirectorWord, as_director, get_validated_count

# === Models ===


@dataclass(frozen=True)
class CutState:
    """
    The cut of ``u_0 ... u_n`` at the position ``n``.

    Attributes
    ----------
    n : :class:`int`
        The position.
    l : :class:`int`
        The cut index ``ℓ_n``.
    prefix_len : :class:`int`
        The length ``|22 w_0 ... w_{ℓ_n - 1}|`` of the block prefix.
    g_len : :class:`int`
        The length ``|g_n| = (n + 1) - prefix_len``, or 0 if the block prefix covers
        the whole of ``u_0 ... u_n``.
    g_count1 : :class:`int`
        The number of 1s in ``g_n``.

    Properties
    ----------
    g_freq : :class:`float`
        The frequency of the letter 1 in ``g_n`` (``nan`` for an empty ``g_n``).

    """

    n: int
    l: int  # noqa: E741
    prefix_len: int
    g_len: int
    g_count1: int

    @property
    def g_freq(self) -> float:
        if self.g_len == 0:
            return float("nan")

        return self.g_count1 / self.g_len


@dataclass(frozen=True, eq=False)
class CutSeries:
    """
    The cuts at all the positions ``0`` to ``n - 1`` stored as NumPy arrays of dtype
    ``np.int64`` that are aligned with the positions.

    """

    l: np.ndarray  # noqa: E741
    prefix_len: np.ndarray
    g_len: np.ndarray
    g_count1: np.ndarray

    def __len__(self) -> int:
        return self.l.size

    def at(self, position: int) -> CutState:
        """
        Returns the cut at the given position.

        """

        position = get_validated_count(
            value=position,
            name="position",
            maximum=len(self) - 1,
        )
        return CutState(
            n=position,
            l=int(self.l[position]),
            prefix_len=int(self.prefix_len[position]),
            g_len=int(self.g_len[position]),
            g_count1=int(self.g_count1[position]),
        )

    def states(self, positions: Iterable[int]) -> List[CutState]:
        """
        Returns the cuts at the given positions.

        """

        return [self.at(position) for position in positions]


# === Auxiliary Functions ===


def _block_starts(x1: DirectorWord, x2: DirectorWord, n: int) -> np.ndarray:
    """
    Computes the block starts ``S_0, S_1, ...`` from the director cursors up to the
    first ``S_m`` with ``S_m^2 >= n``. Later block starts cannot enter a cut of a
    prefix of length ``n``.

    """

    starts = [SEED_LENGTH]
    for block in iter_block_counts(x1=x1, x2=x2):
        if starts[-1] ** 2 >= n:
            break

        starts.append(block.end_position)

    return np.array(starts, dtype=np.int64)


def _cut_segments(starts: np.ndarray, n: int) -> np.ndarray:
    """
    Computes the first position at which each cut index is in effect.

    Returns
    -------
    first_positions : :class:`numpy.ndarray` of dtype ``np.int64``
        The entry ``ℓ`` is the first position with the cut index ``ℓ``. Only the cut
        indices reached before the position ``n`` are included.

    """

    first_positions = [0]
    position = 0
    cut_index = 0
    # NOTE: the last block start satisfies S^2 >= n, so its threshold is never reached
    while cut_index + 1 < starts.size:
        threshold = int(starts[cut_index + 1]) ** 2 + int(starts[cut_index]) - 1
        position = max(position, threshold) + 1
        if position >= n:
            break

        first_positions.append(position)
        cut_index += 1

    return np.array(first_positions, dtype=np.int64)


def _cut_states_streamed(
    x1: DirectorWord,
    x2: DirectorWord,
    starts: np.ndarray,
    first_positions: np.ndarray,
    positions: List[int],
) -> List[CutState]:
    """
    Computes the cuts at the given positions from two counting streams, one for the
    ends of the ``g_n`` and one for their starts. Both only move forward when the
    positions are visited in ascending order.

    """

    ends_state = init_generator(x1=x1, x2=x2)
    starts_state = init_generator(x1=x1, x2=x2)
    cuts = {}
    for position in sorted(set(positions)):
        cut_index = int(np.searchsorted(first_positions, position, side="right")) - 1
        prefix_len = int(starts[cut_index])
        g_start = min(prefix_len, position + 1)
        ones_to_end = count_letters(ends_state, n=position + 1)
        ones_to_start = count_letters(starts_state, n=g_start)
        cuts[position] = CutState(
            n=position,
            l=cut_index,
            prefix_len=prefix_len,
            g_len=position + 1 - g_start,
            g_count1=ones_to_end - ones_to_start,
        )

    return [cuts[position] for position in positions]


# === Functions ===


def cut_sequence(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    n: int,
    positions: Optional[Iterable[int]] = None,
) -> Union[CutSeries, List[CutState]]:
    """
    Cuts the prefix ``u_0 ... u_{n - 1}`` at every position.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    n : :class:`int`
        The number of letters ``>= 1``.
    positions : iterable of :class:`int` or ``None``, default=``None``
        If given, only the cuts at these positions ``< n`` are computed and returned.
        They are obtained by streaming, so the memory does not grow with ``n``.

    Returns
    -------
    cuts : :class:`CutSeries` or :class:`list` of :class:`CutState`
        The cuts at all the positions if ``positions`` is ``None``, otherwise the cuts
        at the given positions in the given order.

    Notes
    -----
    The block prefix ``22 w_0 ... w_{ℓ - 1}`` ends at the block start ``S_ℓ`` and the
    cut index ``ℓ`` is incremented after the position ``p`` whenever
    ``(p + 1 - S_ℓ) + 1 > S_{ℓ+1}^2``, i.e., after the first position
    ``p >= S_{ℓ+1}^2 + S_ℓ - 1`` at which ``ℓ`` is in effect. The seed ``22`` belongs
    to the block prefix.

    The block starts are taken from the director cursors without generating letters.
    Only the cuts at all the positions require the prefix to be materialised.

    """

    x1, x2 = as_director(x1), as_director(x2)
    n = get_validated_count(value=n, name="n", minimum=1)
    if positions is not None:
        positions = [
            get_validated_count(value=position, name="position", maximum=n - 1)
            for position in positions
        ]

    starts = _block_starts(x1=x1, x2=x2, n=n)
    first_positions = _cut_segments(starts=starts, n=n)

    if positions is not None:
        return _cut_states_streamed(
            x1=x1,
            x2=x2,
            starts=starts,
            first_positions=first_positions,
            positions=positions,
        )

    u = take_letters(init_generator(x1=x1, x2=x2), n=n)
    cut_indices = np.repeat(
        np.arange(first_positions.size, dtype=np.int64),
        np.diff(np.append(first_positions, n)),
    )
    ones_prefix = np.zeros(n + 1, dtype=np.int64)
    ones_prefix[1:] = np.cumsum(u == 1, dtype=np.int64)
    ends = np.arange(1, n + 1, dtype=np.int64)
    prefix_len = starts[cut_indices]
    g_start = np.minimum(prefix_len, ends)

    return CutSeries(
        l=cut_indices,
        prefix_len=prefix_len,
        g_len=ends - g_start,
        g_count1=ones_prefix[ends] - ones_prefix[g_start],
    )
