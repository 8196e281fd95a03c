"""
Module :mod:`words._director`

This module implements the periodic director words ``x1`` and ``x2`` whose infinite
repetitions ``T1 = (x1)^ω`` and ``T2 = (x2)^ω`` direct a self-descriptive sequence, and
their exact letter densities

- ``p1``: the density of the letter 1 in ``x1``
- ``q2``: the density of the letter 2 in ``x2``

"""

# === Imports ===

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Tuple, Union

import numpy as np

from ._validate import (
    ALPHABET,
    get_validated_count,
    get_validated_director_text,
    get_validated_letters,
)

# === Models ===


@dataclass(frozen=True)
class DirectorWord:
    """
    A finite, non-empty word over ``{1, 2}`` that is repeated forever to direct the
    runs of a self-descriptive sequence.

    Attributes
    ----------
    letters : :class:`tuple` of :class:`int`
        The letters of the word, each being 1 or 2.

    Properties
    ----------
    period : :class:`int`
        The length of the word.

    Raises
    ------
    DirectorWordError
        If the word is empty or contains a letter other than 1 or 2.

    """

    letters: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", get_validated_letters(self.letters))

    @property
    def period(self) -> int:
        return len(self.letters)

    def count(self, letter: int) -> int:
        """
        Counts the occurrences of ``letter`` in the word, i.e., ``|x|_letter``.

        """

        return self.letters.count(letter)

    def ones_in_cycle(self, count: int, start: int = 0) -> int:
        """
        Counts the 1s among the ``count`` letters of ``(x)^ω`` that start at the index
        ``start`` of the word.

        """

        count = get_validated_count(value=count, name="count")
        num_periods, remainder = divmod(count, self.period)
        start %= self.period
        doubled = self.letters + self.letters
        return num_periods * self.count(1) + doubled[start : start + remainder].count(1)

    def rotated(self, shift: int) -> "DirectorWord":
        """
        Returns the cyclic rotation of the word that starts at index ``shift``.

        """

        shift %= self.period
        return DirectorWord(self.letters[shift:] + self.letters[:shift])

    def repeated(self, times: int) -> "DirectorWord":
        """
        Returns the word concatenated ``times`` times with itself.

        """

        times = get_validated_count(value=times, name="times", minimum=1)
        return DirectorWord(self.letters * times)

    def as_array(self) -> np.ndarray:
        """
        Returns the letters as a NumPy array of dtype ``np.int8`` as consumed by the
        generation kernel.

        """

        return np.array(self.letters, dtype=np.int8)

    def __len__(self) -> int:
        return self.period

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self.letters)


@dataclass(frozen=True)
class DensityPair:
    """
    The exact letter densities of a pair of director words.

    Attributes
    ----------
    p1 : :class:`fractions.Fraction`
        The density ``|x1|_1 / |x1|`` of the letter 1 in the first director word.
    q2 : :class:`fractions.Fraction`
        The density ``|x2|_2 / |x2|`` of the letter 2 in the second director word.

    Properties
    ----------
    p2 : :class:`fractions.Fraction`
        ``1 - p1``, the density of the letter 2 in the first director word.
    q1 : :class:`fractions.Fraction`
        ``1 - q2``, the density of the letter 1 in the second director word.

    """

    p1: Fraction
    q2: Fraction

    def __post_init__(self) -> None:
        for name in ("p1", "q2"):
            value = Fraction(getattr(self, name))
            if not 0 <= value <= 1:
                raise ValueError(
                    f"Expected '{name}' to be a density in [0, 1] but got {value}."
                )

            object.__setattr__(self, name, value)

    @property
    def p2(self) -> Fraction:
        return 1 - self.p1

    @property
    def q1(self) -> Fraction:
        return 1 - self.q2


# === Functions ===


def parse_director(text: str) -> DirectorWord:
    """
    Parses the textual form of a director word, e.g., ``"121"``.

    Parameters
    ----------
    text : :class:`str`
        The digits of the word, each being ``'1'`` or ``'2'``.

    Returns
    -------
    word : :class:`DirectorWord`
        The parsed word.

    Raises
    ------
    TypeError
        If ``text`` is not a string.
    DirectorWordError
        If ``text`` is empty or contains a character other than ``'1'`` and ``'2'``;
        the position of the offending character is stored in the exception.

    """

    return DirectorWord(get_validated_director_text(text=text))


def as_director(word: Union[str, DirectorWord]) -> DirectorWord:
    """
    Returns ``word`` as a :class:`DirectorWord`, parsing it if it is a string.

    """

    if isinstance(word, DirectorWord):
        return word

    return parse_director(word)


def densities(
    x1: Union[str, DirectorWord],
    x2: Union[str, DirectorWord],
) -> DensityPair:
    """
    Computes the exact densities ``p1 = |x1|_1 / |x1|`` and ``q2 = |x2|_2 / |x2|``.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words of ``T1`` and ``T2``.

    Returns
    -------
    densities : :class:`DensityPair`
        The exact rational densities. No floating point rounding is involved.

    """

    x1, x2 = as_director(x1), as_director(x2)
    return DensityPair(
        p1=Fraction(x1.count(1), x1.period),
        q2=Fraction(x2.count(2), x2.period),
    )


def iter_director_words(max_period: int) -> Iterator[DirectorWord]:
    """
    Yields all director words with a period between 1 and ``max_period`` in
    lexicographic order of their textual form.

    """

    max_period = get_validated_count(value=max_period, name="max_period", minimum=1)
    texts = (
        "".join(str(letter) for letter in letters)
        for period in range(1, max_period + 1)
        for letters in product(ALPHABET, repeat=period)
    )
    for text in sorted(texts):
        yield parse_director(text)
