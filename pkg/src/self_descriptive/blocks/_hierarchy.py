"""
Module :mod:`blocks._hierarchy`

This module implements the block decomposition ``u = 22 w_0 w_1 w_2 ...`` of a
self-descriptive sequence where

- ``w_0`` is the recoded run that is produced by reading the second seed letter
    ``u_1``
- ``w_{n+1}`` is the concatenation of the recoded runs that are produced by reading
    the letters of ``w_n`` one after another

With ``S_0 = 2`` and ``S_{m+1} = u_0 + ... + u_{S_m - 1}``, the block ``w_m`` covers the
positions ``S_m`` to ``S_{m+1} - 1`` of ``u``.

"""

# === Imports ===

import logging
from itertools import islice
from typing import Iterator, List, Optional, Sequence, Union

import numpy as np

from ..generator import SEED_LENGTH, init_generator, take_letters
from ..words import DirectorWord, as_director, get_validated_count
from ._recoding import BlockLevel, CountVector, RecodedLetter

# === Constants ===

# the maximum number of letters of ``u`` that are materialised to spell out blocks
MAX_BLOCK_LETTERS = 200_000_000

logger = logging.getLogger(__name__)

# === Functions ===


def iter_block_counts(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
) -> Iterator[BlockLevel]:
    """
    Yields the count vectors and the positions of the blocks ``w_0, w_1, ...`` without
    materialising any letters.

    Since the letters of value 1 of ``w_n`` consume the next ``n_a + n_c`` letters of
    ``T1`` and the letters of value 2 consume the next ``n_b + n_d`` letters of ``T2``,
    the count vector of ``w_{n+1}`` only depends on the count vector of ``w_n`` and on
    the positions of the director cursors. Hence, this works for levels whose blocks
    are far too long to be stored.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.

    Yields
    ------
    block : :class:`BlockLevel`
        The next block without its letters, i.e., with ``codes = None``. The iterator
        never ends.

    """

    x1, x2 = as_director(x1), as_director(x2)

    cursor_t1 = cursor_t2 = 0
    # w_0 is produced by reading the second seed letter which is a 2
    num_value1, num_value2 = 0, 1
    start = SEED_LENGTH
    level = 0
    while True:
        ones_t1 = x1.ones_in_cycle(count=num_value1, start=cursor_t1)
        ones_t2 = x2.ones_in_cycle(count=num_value2, start=cursor_t2)
        cursor_t1 = (cursor_t1 + num_value1) % x1.period
        cursor_t2 = (cursor_t2 + num_value2) % x2.period

        v = CountVector(
            n_a=ones_t1,
            n_b=num_value1 - ones_t1,
            n_c=2 * ones_t2,
            n_d=2 * (num_value2 - ones_t2),
        )
        yield BlockLevel(
            level=level,
            start_position=start,
            end_position=start + v.total,
            v=v,
        )
        num_value1, num_value2 = v.value_counts
        start += v.total
        level += 1


def block_counts(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    levels: int,
) -> List[BlockLevel]:
    """
    Computes the count vectors and the positions of the blocks ``w_0`` to
    ``w_{levels - 1}`` without materialising any letters.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    levels : :class:`int`
        The number of levels ``>= 1``.

    Returns
    -------
    blocks : :class:`list` of :class:`BlockLevel`
        The blocks without their letters, i.e., with ``codes = None``.

    See Also
    --------
    :func:`iter_block_counts`

    """

    levels = get_validated_count(value=levels, name="levels", minimum=1)
    return list(islice(iter_block_counts(x1=x1, x2=x2), levels))


def block_boundaries(u: np.ndarray, levels: Optional[int] = None) -> np.ndarray:
    """
    Computes the start positions ``S_0 = 2`` and ``S_{m+1} = u_0 + ... + u_{S_m - 1}``
    of the blocks from a materialised prefix of ``u``.

    Parameters
    ----------
    u : :class:`numpy.ndarray` of shape (n,)
        The prefix ``u_0 ... u_{n - 1}``.
    levels : :class:`int` or ``None``, default=``None``
        The maximum number of levels. If ``None``, all the start positions that can be
        computed from the prefix are returned.

    Returns
    -------
    starts : :class:`numpy.ndarray` of dtype ``np.int64``
        The start positions ``S_0, S_1, ...``, at most ``levels + 1`` of them. The
        last one is the first ``S_m > n`` or ``S_levels``.

    """

    u = np.asarray(u)
    if levels is not None:
        levels = get_validated_count(value=levels, name="levels")

    prefix_sums = np.cumsum(u, dtype=np.int64)
    starts = [SEED_LENGTH]
    while (levels is None or len(starts) <= levels) and starts[-1] <= u.size:
        starts.append(int(prefix_sums[starts[-1] - 1]))

    return np.array(starts, dtype=np.int64)


def block_decompose(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    levels: int,
    max_letters: int = MAX_BLOCK_LETTERS,
) -> List[BlockLevel]:
    """
    Decomposes the prefix of ``u`` into the blocks ``w_0`` to ``w_{levels - 1}`` and
    spells them out over ``{a, b, c, d}``.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    levels : :class:`int`
        The number of levels ``>= 1``.
    max_letters : :class:`int`, default=``200_000_000``
        The maximum number of letters of ``u`` that may be materialised.

    Returns
    -------
    blocks : :class:`list` of :class:`BlockLevel`
        The blocks with their letters.

    Raises
    ------
    ValueError
        If the blocks span more than ``max_letters`` letters of ``u``.
    RuntimeError
        If the counts of the spelled out blocks do not match the counts obtained from
        the director cursors.

    """

    x1, x2 = as_director(x1), as_director(x2)
    max_letters = get_validated_count(value=max_letters, name="max_letters", minimum=1)
    counted = block_counts(x1=x1, x2=x2, levels=levels)
    num_letters = counted[-1].end_position
    if num_letters > max_letters:
        raise ValueError(
            f"The first {levels} blocks span {num_letters} letters which exceeds the "
            f"maximum of {max_letters} letters."
        )

    u = take_letters(init_generator(x1=x1, x2=x2), n=num_letters)
    logger.debug("Materialised %d letters for %d block levels.", num_letters, levels)

    # the runs k = 1, 2, ... tile u from position 2 on and the run k starts at the
    # position u_0 + ... + u_{k-1}
    num_runs = counted[-1].start_position
    run_starts = np.cumsum(u[: num_runs - 1], dtype=np.int64)
    lengths = u[1:num_runs].astype(np.int64)
    run_letters = u[run_starts].astype(np.int64)
    codes = np.repeat(2 * (lengths - 1) + (run_letters - 1), lengths).astype(np.int8)

    blocks = []
    for block in counted:
        block_codes = codes[
            block.start_position - SEED_LENGTH : block.end_position - SEED_LENGTH
        ]
        level = BlockLevel(
            level=block.level,
            start_position=block.start_position,
            end_position=block.end_position,
            v=block.v,
            codes=block_codes,
        )
        if count_vector(level) != block.v:
            raise RuntimeError(
                f"The block at level {block.level} has the counts "
                f"{count_vector(level)} but the director cursors give {block.v}."
            )

        blocks.append(level)

    return blocks


def count_vector(
    w: Union[BlockLevel, str, Sequence[RecodedLetter]],
) -> CountVector:
    """
    Counts the letters of a word over ``{a, b, c, d}``.

    Parameters
    ----------
    w : :class:`BlockLevel` or :class:`str` or sequence of :class:`RecodedLetter`
        The word. A block without letters returns its stored count vector.

    Returns
    -------
    v : :class:`CountVector`
        The exact counts ``(n_a, n_b, n_c, n_d)``.

    """

    if isinstance(w, BlockLevel):
        if w.codes is None:
            return w.v

        codes = w.codes.astype(np.int64)

    else:
        codes = np.array(
            [RecodedLetter(letter).code for letter in w],
            dtype=np.int64,
        )

    counts = np.bincount(codes, minlength=4)
    return CountVector(*(int(count) for count in counts))
