"""
Module :mod:`blocks._residuals`

This module implements the residuals ``e_n = v_{n+1} - A v_n`` of the count vectors of
the blocks against the linear recursion given by the transition matrix ``A``. They are
computed in exact rational arithmetic.

For periodic directors, the ``n_a + n_c`` letters of ``T1`` consumed by one block form
a window of ``(x1)^ω`` whose number of 1s deviates from the expectation by less than
the period of ``x1``, so the residuals stay bounded by ``max(|x1|, 2 |x2|)``.

"""

# === Imports ===

from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..spectral import TransitionMatrix, build_matrices
from ..words import DirectorWord, as_director, densities, get_validated_count
from ._hierarchy import block_counts
from ._recoding import BlockLevel, CountVector

# === Types ===

Residual = Tuple[Fraction, Fraction, Fraction, Fraction]

# === Functions ===


def recursion_residual(
    v_n: CountVector,
    v_next: CountVector,
    a: TransitionMatrix,
) -> Residual:
    """
    Computes the residual ``e_n = v_{n+1} - A v_n``.

    Parameters
    ----------
    v_n, v_next : :class:`CountVector`
        The count vectors of two consecutive blocks.
    a : :class:`TransitionMatrix`
        The transition matrices built from the densities of the director words that
        generated the blocks.

    Returns
    -------
    e_n : :class:`tuple` of 4 :class:`fractions.Fraction`
        The exact residual ordered ``(a, b, c, d)``.

    """

    expected = a.a.dot(v_n.as_array())
    return tuple(  # type: ignore[return-value]
        Fraction(actual) - Fraction(predicted)
        for actual, predicted in zip(v_next.as_tuple(), expected)
    )


def residual_norm(e_n: Residual) -> Fraction:
    """
    The max-norm ``||e_n||_∞`` of a residual.

    """

    return max(abs(component) for component in e_n)


def residual_table(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
    levels: int,
) -> List[Tuple[BlockLevel, Optional[Residual]]]:
    """
    Computes the blocks ``w_0`` to ``w_{levels - 1}`` together with their residuals.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words.
    levels : :class:`int`
        The number of levels ``>= 1``.

    Returns
    -------
    table : :class:`list` of :class:`tuple`
        The pairs ``(w_n, e_n)``. The residual of the last level is ``None`` since it
        would require the next level.

    """

    x1, x2 = as_director(x1), as_director(x2)
    blocks = block_counts(x1=x1, x2=x2, levels=levels)
    matrices = build_matrices(densities(x1=x1, x2=x2))

    table: List[Tuple[BlockLevel, Optional[Residual]]] = []
    for block, next_block in zip(blocks[:-1], blocks[1:]):
        table.append(
            (block, recursion_residual(v_n=block.v, v_next=next_block.v, a=matrices))
        )

    table.append((blocks[-1], None))
    return table


def max_residual_norm(
    table: List[Tuple[BlockLevel, Optional[Residual]]],
    first_level: int,
    last_level: int,
) -> Fraction:
    """
    Computes the maximum of ``||e_n||_∞`` over the levels ``first_level`` to
    ``last_level`` (both inclusive) of a table from :func:`residual_table`.

    Raises
    ------
    ValueError
        If the table has no residual for a level within the range.

    """

    first_level = get_validated_count(value=first_level, name="first_level")
    last_level = get_validated_count(
        value=last_level,
        name="last_level",
        minimum=first_level,
    )

    residuals = {block.level: e_n for block, e_n in table}
    norms = []
    for level in range(first_level, last_level + 1):
        e_n = residuals.get(level)
        if e_n is None:
            raise ValueError(
                f"Expected a residual for level {level} but the table covers the "
                f"levels {min(residuals)} to {max(residuals)} with the last one "
                f"lacking a residual."
            )

        norms.append(residual_norm(e_n))

    return max(norms)
