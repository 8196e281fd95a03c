"""
Module :mod:`blocks._recoding`

This module implements the recoding of the runs of a self-descriptive sequence over the
alphabet ``{a, b, c, d}``:

- ``a`` (``b``) marks a run of length 1 of the letter 1 (2) fed by ``T1``
- ``c`` (``d``) marks each of the two letters of a run of length 2 of the letter 1 (2)
    fed by ``T2``

Internally, the recoded letters are handled by their codes
``2 * (length - 1) + (letter - 1)``, i.e., ``a = 0``, ``b = 1``, ``c = 2``, ``d = 3``,
so the letter value of a code is ``(code & 1) + 1``.

"""

# === Imports ===

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..generator import RunEvent

# === Models ===


class RecodedLetter(str, Enum):
    """
    The letters of the recoded alphabet.

    """

    A = "a"
    B = "b"
    C = "c"
    D = "d"

    @property
    def code(self) -> int:
        return _CODES[self]

    @property
    def letter_value(self) -> int:
        """
        The letter of ``u`` the recoded letter stands for, i.e., 1 for ``a`` and ``c``
        and 2 for ``b`` and ``d``.

        """

        return (self.code & 1) + 1

    @classmethod
    def from_code(cls, code: int) -> "RecodedLetter":
        return _LETTERS[code]


_LETTERS: Tuple[RecodedLetter, ...] = tuple(RecodedLetter)
_CODES = {letter: code for code, letter in enumerate(_LETTERS)}


@dataclass(frozen=True)
class CountVector:
    """
    The abelianised count vector ``(n_a, n_b, n_c, n_d)`` of a word over
    ``{a, b, c, d}``.

    Raises
    ------
    ValueError
        If a count is negative or ``n_c`` or ``n_d`` is odd since the letters ``c``
        and ``d`` only come in pairs.

    """

    n_a: int
    n_b: int
    n_c: int
    n_d: int

    def __post_init__(self) -> None:
        for name, count in zip("abcd", self.as_tuple()):
            if count < 0:
                raise ValueError(
                    f"Expected 'n_{name}' to be >= 0 but got {count}."
                )

        if self.n_c % 2 != 0 or self.n_d % 2 != 0:
            raise ValueError(
                f"Expected 'n_c' and 'n_d' to be even but got {self.n_c} and "
                f"{self.n_d}."
            )

    @property
    def total(self) -> int:
        return self.n_a + self.n_b + self.n_c + self.n_d

    @property
    def value_counts(self) -> Tuple[int, int]:
        """
        The numbers of letters of value 1 (``a`` and ``c``) and of value 2 (``b`` and
        ``d``).

        """

        return self.n_a + self.n_c, self.n_b + self.n_d

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.n_a, self.n_b, self.n_c, self.n_d

    def as_array(self) -> np.ndarray:
        """
        Returns the counts as a NumPy array of dtype ``object`` holding
        :class:`fractions.Fraction` so that it can be multiplied exactly with a
        transition matrix.

        """

        return np.array([Fraction(count) for count in self.as_tuple()], dtype=object)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.as_tuple())


@dataclass(frozen=True, eq=False)
class BlockLevel:
    """
    The block ``w_n`` of the decomposition ``u = 22 w_0 w_1 w_2 ...``.

    Attributes
    ----------
    level : :class:`int`
        The level ``n``.
    start_position, end_position : :class:`int`
        The block covers the positions ``start_position`` to ``end_position - 1`` of
        ``u``.
    v : :class:`CountVector`
        The count vector of the block.
    codes : :class:`numpy.ndarray` of dtype ``np.int8`` or ``None``
        The codes of the recoded letters of the block. ``None`` if only the counts were
        computed.

    """

    level: int
    start_position: int
    end_position: int
    v: CountVector
    codes: Optional[np.ndarray] = None

    @property
    def length(self) -> int:
        return self.end_position - self.start_position

    @property
    def word(self) -> str:
        """
        The block as a word over ``{a, b, c, d}``.

        """

        if self.codes is None:
            raise ValueError(
                f"The letters of the block at level {self.level} were not materialised."
            )

        return "".join(
            RecodedLetter.from_code(code).value for code in self.codes.tolist()
        )

    def decoded(self) -> np.ndarray:
        """
        Returns the letters of ``u`` covered by the block as a NumPy array of dtype
        ``np.int8``.

        """

        if self.codes is None:
            raise ValueError(
                f"The letters of the block at level {self.level} were not materialised."
            )

        return ((self.codes & 1) + 1).astype(np.int8)


# === Functions ===


def recode_run(event: RunEvent) -> List[RecodedLetter]:
    """
    Recodes a run over ``{a, b, c, d}``.

    Parameters
    ----------
    event : :class:`RunEvent`
        The run. It must not be the seed run.

    Returns
    -------
    letters : :class:`list` of :class:`RecodedLetter`
        ``[a]`` or ``[b]`` for runs of length 1 and ``[c, c]`` or ``[d, d]`` for runs
        of length 2.

    Raises
    ------
    ValueError
        If the run is the seed run ``k = 0``.

    """

    if event.run_index < 1:
        raise ValueError(
            f"Expected a run with an index >= 1 but got {event.run_index}; the seed "
            f"run is not recoded."
        )

    code = 2 * (event.length - 1) + (event.letter - 1)
    return [RecodedLetter.from_code(code)] * event.length
