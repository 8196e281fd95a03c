"""
Module :mod:`words._validate`

This module implements the input validations shared by the whole package:

- ``text``: the textual form of a director word
- ``letters``: the letters of a director word
- counts like the number of letters ``n`` or the number of block ``levels``

"""

# === Imports ===

from typing import Any, Iterable, Optional, Tuple

import numpy as np

# === Constants ===

# the letters a director word may consist of
ALPHABET = (1, 2)
_ALPHABET_CHARACTERS = {"1": 1, "2": 2}

# === Exceptions ===


class DirectorWordError(ValueError):
    """
    Exception raised when a text or a sequence of letters does not describe a valid
    director word over the alphabet ``{1, 2}``.

    Attributes
    ----------
    position : :class:`int` or ``None``
        The index of the offending character or letter. ``None`` if the input is
        empty.

    """

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        super().__init__(message)
        self.position = position


# === Functions ===


def get_validated_director_text(text: Any) -> Tuple[int, ...]:
    """
    Validates the textual form of a director word, e.g., ``"121"``, and returns its
    letters.

    """

    if not isinstance(text, str):
        raise TypeError(
            f"Expected the director word to be a string but got type {type(text)}."
        )

    if len(text) < 1:
        raise DirectorWordError("Expected a non-empty director word but got ''.")

    letters = []
    for position, character in enumerate(text):
        letter = _ALPHABET_CHARACTERS.get(character)
        if letter is None:
            raise DirectorWordError(
                f"Expected the director word to consist of '1' and '2' only but got "
                f"{character!r} at position {position} in {text!r}.",
                position=position,
            )

        letters.append(letter)

    return tuple(letters)


def get_validated_letters(letters: Iterable[Any]) -> Tuple[int, ...]:
    """
    Validates the letters of a director word and returns them as a tuple of Python
    integers.

    """

    validated = []
    for position, letter in enumerate(letters):
        # NumPy integers need to be converted to Python integers
        if isinstance(letter, np.integer):
            letter = int(letter)

        if (
            isinstance(letter, bool)
            or not isinstance(letter, int)
            or letter not in ALPHABET
        ):
            raise DirectorWordError(
                f"Expected every letter to be 1 or 2 but got {letter!r} at position "
                f"{position}.",
                position=position,
            )

        validated.append(letter)

    if len(validated) < 1:
        raise DirectorWordError("Expected a director word with at least one letter.")

    return tuple(validated)


def get_validated_count(
    value: Any,
    name: str,
    minimum: int = 0,
    maximum: Optional[int] = None,
) -> int:
    """
    Validates a count, e.g., a number of letters, and returns it as a Python integer.

    """

    # NumPy integers need to be converted to Python integers
    if isinstance(value, np.integer):
        value = int(value)

    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(
            f"Expected '{name}' to be an integer but got type {type(value)}."
        )

    if value < minimum:
        raise ValueError(f"Expected '{name}' to be >= {minimum} but got {value}.")

    if maximum is not None and value > maximum:
        raise ValueError(f"Expected '{name}' to be <= {maximum} but got {value}.")

    return value


def get_validated_checkpoints(
    checkpoints: Iterable[Any],
    n: int,
) -> Tuple[int, ...]:
    """
    Validates a schedule of checkpoints, i.e., strictly increasing positive counts that
    do not exceed ``n``.

    """

    validated = tuple(
        get_validated_count(value=checkpoint, name="checkpoint", minimum=1)
        for checkpoint in checkpoints
    )
    if len(validated) < 1:
        raise ValueError("Expected at least one checkpoint.")

    if any(left >= right for left, right in zip(validated[:-1], validated[1:])):
        raise ValueError(
            f"Expected the checkpoints to be strictly increasing but got {validated}."
        )

    if validated[-1] > n:
        raise ValueError(
            f"Expected the checkpoints to not exceed n = {n} but got {validated[-1]}."
        )

    return validated
