"""
Module :mod:`spectral._matrices`

This module implements the exact rational transition matrices that describe how the
letters of a block ``w_n`` of a self-descriptive sequence spawn the letters of the next
block ``w_{n+1}``:

- ``A``: the 4x4 matrix over the recoded alphabet ``{a, b, c, d}``
- ``B``: its 2x2 reduction over the letter values ``{1, 2}``

as well as the discriminant ``Δ`` of the characteristic polynomial of ``B``.

"""

# === Imports ===

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..words import DensityPair

# === Models ===


@dataclass(frozen=True)
class TransitionMatrix:
    """
    The transition matrices of a pair of director words.

    Attributes
    ----------
    densities : :class:`DensityPair`
        The densities the matrices are built from.
    a : :class:`numpy.ndarray` of shape (4, 4) of dtype ``object``
        The matrix ``A`` with :class:`fractions.Fraction` entries whose rows and
        columns are ordered ``(a, b, c, d)``.
    b : :class:`numpy.ndarray` of shape (2, 2) of dtype ``object``
        The matrix ``B = ((p1, 2 q1), (p2, 2 q2))`` with
        :class:`fractions.Fraction` entries whose rows and columns are ordered by the
        letter values ``(1, 2)``.

    """

    densities: DensityPair
    a: np.ndarray
    b: np.ndarray

    @property
    def a_float(self) -> np.ndarray:
        """
        ``A`` with ``np.float64`` entries.

        """

        return self.a.astype(np.float64)

    @property
    def trace(self) -> Fraction:
        """
        The trace ``p1 + 2 q2`` of ``B``.

        """

        return self.b[0, 0] + self.b[1, 1]

    @property
    def determinant(self) -> Fraction:
        """
        The determinant ``2 (p1 + q2 - 1)`` of ``B``.

        """

        return self.b[0, 0] * self.b[1, 1] - self.b[0, 1] * self.b[1, 0]


# === Functions ===


def build_matrices(d: DensityPair) -> TransitionMatrix:
    """
    Builds the exact transition matrices

    ``A = ((p1, 0, p1, 0), (p2, 0, p2, 0), (0, 2 q1, 0, 2 q1), (0, 2 q2, 0, 2 q2))``

    and ``B = ((p1, 2 q1), (p2, 2 q2))``.

    A letter of value 1 (``a`` or ``c``) spawns a run of length 1 whose letter is 1
    with probability ``p1``, while a letter of value 2 (``b`` or ``d``) spawns a run of
    length 2 whose letter is 1 with probability ``q1``. Thus, every column of ``A`` is
    the expected count vector of the letters spawned by one letter.

    Parameters
    ----------
    d : :class:`DensityPair`
        The densities ``p1`` and ``q2``.

    Returns
    -------
    matrices : :class:`TransitionMatrix`
        The matrices with :class:`fractions.Fraction` entries.

    """

    p1, p2, q1, q2 = d.p1, d.p2, d.q1, d.q2
    zero = Fraction(0)
    a = np.array(
        [
            [p1, zero, p1, zero],
            [p2, zero, p2, zero],
            [zero, 2 * q1, zero, 2 * q1],
            [zero, 2 * q2, zero, 2 * q2],
        ],
        dtype=object,
    )
    b = np.array(
        [
            [p1, 2 * q1],
            [p2, 2 * q2],
        ],
        dtype=object,
    )

    return TransitionMatrix(densities=d, a=a, b=b)


def discriminant(d: DensityPair) -> Fraction:
    """
    Computes the exact discriminant ``Δ = (p1 + 2 q2)^2 - 8 (p1 + q2 - 1)`` of the
    characteristic polynomial ``λ^2 - (p1 + 2 q2) λ + 2 (p1 + q2 - 1)`` of ``B``.

    Parameters
    ----------
    d : :class:`DensityPair`
        The densities ``p1`` and ``q2``.

    Returns
    -------
    delta : :class:`fractions.Fraction`
        The discriminant which is non-negative for all densities in ``[0, 1]``.

    Raises
    ------
    RuntimeError
        If the discriminant is negative which cannot happen for valid densities.

    """

    delta = (d.p1 + 2 * d.q2) ** 2 - 8 * (d.p1 + d.q2 - 1)
    if delta < 0:
        raise RuntimeError(
            f"The discriminant {delta} of the densities p1 = {d.p1} and q2 = {d.q2} is "
            f"negative."
        )

    return delta
