"""
Module :mod:`generator._class_interface`

This module implements a class based interface to the self-descriptive sequences via
the class :class:`SelfDescriptiveSequence`.

"""

# === Imports ===

from typing import Iterator, Union

import numpy as np

from ..words import DensityPair, DirectorWord, as_director, densities
from ._state import (
    GeneratorState,
    RunEvent,
    delta_prefix,
    init_generator,
    iter_run_events,
    take_letters,
)

# === Classes ===


class SelfDescriptiveSequence:
    """
    This class represents the self-descriptive sequence ``u`` over ``{1, 2}`` that is
    directed by the two periodic directors ``T1 = (x1)^ω`` and ``T2 = (x2)^ω``, i.e.,

    - the runs of length 1 take their letters one after another from ``T1``,
    - the runs of length 2 take their letters one after another from ``T2``,

    where the length of the ``k``-th run is the letter ``u_k`` itself.

    Parameters
    ----------
    x1, x2 : :class:`DirectorWord` or :class:`str`
        The director words, e.g., ``"12"`` and ``"1"``.

    Attributes
    ----------
    x1, x2 : :class:`DirectorWord`
        The director words.
    densities : :class:`DensityPair`
        The exact densities ``p1`` and ``q2`` of the director words.

    Methods
    -------
    stream()
        Creates a fresh streaming state.
    letters(n)
        Returns the prefix ``u_0 ... u_{n - 1}``.
    directing(n)
        Returns the prefix ``δ_0 ... δ_{n - 1}``.
    runs(n_letters)
        Iterates over the runs that make up the prefix of length ``n_letters``.
    theory()
        Computes the theoretical letter frequencies.

    Raises
    ------
    TypeError
        If a director word is neither a string nor a :class:`DirectorWord`.
    DirectorWordError
        If a director word is empty or contains letters other than 1 and 2.

    """

    # --- Constructor ---

    def __init__(
        self,
        x1: Union[str, DirectorWord],
        x2: Union[str, DirectorWord],
    ):
        self._x1: DirectorWord = as_director(x1)
        self._x2: DirectorWord = as_director(x2)

    # --- Properties ---

    @property
    def x1(self) -> DirectorWord:
        return self._x1

    @x1.setter
    def x1(self, value: Union[str, DirectorWord]) -> None:
        self._x1 = as_director(value)

    @property
    def x2(self) -> DirectorWord:
        return self._x2

    @x2.setter
    def x2(self, value: Union[str, DirectorWord]) -> None:
        self._x2 = as_director(value)

    @property
    def densities(self) -> DensityPair:
        return densities(x1=self._x1, x2=self._x2)

    # --- Public Methods ---

    def stream(self) -> GeneratorState:
        """
        Creates a fresh :class:`GeneratorState` for a single consumer.

        """

        return init_generator(x1=self._x1, x2=self._x2)

    def letters(self, n: int) -> np.ndarray:
        """
        Returns the letters ``u_0 ... u_{n - 1}`` as a NumPy array of dtype
        ``np.int8``.

        """

        return take_letters(self.stream(), n=n)

    def directing(self, n: int) -> np.ndarray:
        """
        Returns the letters ``δ_0 ... δ_{n - 1}`` as a NumPy array of dtype
        ``np.int8``.

        """

        return delta_prefix(self.stream(), n=n)

    def runs(self, n_letters: int) -> Iterator[RunEvent]:
        """
        Iterates over the runs that start before the position ``n_letters``.

        """

        return iter_run_events(self.stream(), n_letters=n_letters)

    def theory(self):
        """
        Computes the theoretical frequencies of the letter 1 in ``u`` and ``δ``.

        Returns
        -------
        frequencies : :class:`spectral.Frequencies`
            The theoretical frequencies.

        """

        # NOTE: the import is local since the spectral module is not needed to generate
        from ..spectral import theoretical_frequencies

        return theoretical_frequencies(self.densities)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(x1='{self._x1}', x2='{self._x2}')"
