"""
Module :mod:`generator._oracle`

This module implements naive list-based generators of self-descriptive sequences that
serve as independent references for the streaming engine in :mod:`generator._state`:

- :func:`oracle_generate` appends whole runs to Python lists while reading the sequence
    at the run index, without any windowing or bit-packing
- :func:`bjm_rule_generate` builds the sequence directed by ``T1 = (12)^ω`` and
    ``T2 = 1^ω`` from its parity rule, i.e., runs of length 1 are filled alternately
    with 1 and 2 and runs of length 2 are filled with 1

"""

# === Imports ===

from itertools import cycle
from typing import List, Optional, Tuple, Union

from ..words import DirectorWord, as_director, get_validated_count

# === Functions ===


def oracle_generate(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    num_letters: int,
    num_runs: Optional[int] = None,
) -> Tuple[List[int], List[int]]:
    """
    Generates the prefixes of the self-descriptive sequence ``u`` and its directing
    sequence ``δ`` for the directors ``T1 = (x1)^ω`` and ``T2 = (x2)^ω``.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    num_letters : :class:`int`
        The number of letters of ``u`` to return.
    num_runs : :class:`int` or ``None``, default=``None``
        The number of letters of ``δ`` to return. If ``None``, all the letters of the
        runs expanded to produce the ``num_letters`` letters of ``u`` are returned.

    Returns
    -------
    u : :class:`list` of :class:`int`
        The letters ``u_0 ... u_{num_letters - 1}``.
    delta : :class:`list` of :class:`int`
        The letters ``δ_0 ... δ_{num_runs - 1}``.

    """

    x1, x2 = as_director(x1), as_director(x2)
    num_letters = get_validated_count(value=num_letters, name="num_letters")
    min_runs = 0
    if num_runs is not None:
        min_runs = get_validated_count(value=num_runs, name="num_runs")

    t1 = cycle(x1.letters)
    t2 = cycle(x2.letters)
    u = [2, 2]
    delta = [2]
    k = 1
    while len(u) < num_letters or len(delta) < min_runs:
        if u[k] == 1:
            letter = next(t1)
        else:
            letter = next(t2)

        u.extend([letter] * u[k])
        delta.append(letter)
        k += 1

    if num_runs is None:
        return u[:num_letters], delta

    return u[:num_letters], delta[:num_runs]


def bjm_rule_generate(num_letters: int) -> Tuple[List[int], List[int]]:
    """
    Generates the prefix of the sequence ``u = δ_0^{u_0} δ_1^{u_1} ...`` whose run
    letters follow the parity rule

    - ``δ_n = 1`` if ``u_n = 2``
    - ``δ_n = 1`` if ``u_n = 1`` and ``|u_0 ... u_n|_1`` is odd
    - ``δ_n = 2`` if ``u_n = 1`` and ``|u_0 ... u_n|_1`` is even

    for ``n >= 1`` with the seed ``u_0 = u_1 = 2`` and ``δ_0 = 2``.

    Parameters
    ----------
    num_letters : :class:`int`
        The number of letters of ``u`` to return.

    Returns
    -------
    u : :class:`list` of :class:`int`
        The letters ``u_0 ... u_{num_letters - 1}``.
    delta : :class:`list` of :class:`int`
        The letters of all the runs expanded.

    """

    num_letters = get_validated_count(value=num_letters, name="num_letters")

    u = [2, 2]
    delta = [2]
    ones_read = 0
    k = 1
    while len(u) < num_letters:
        if u[k] == 1:
            ones_read += 1
            letter = 1 if ones_read % 2 == 1 else 2
        else:
            letter = 1

        u.extend([letter] * u[k])
        delta.append(letter)
        k += 1

    return u[:num_letters], delta
