"""
This test suite implements the tests for the modules :mod:`generator._numpy_funcs`
and :mod:`generator._numba_funcs`.

"""

# === Imports ===

import numpy as np
import pytest

from self_descriptive.generator._numba_funcs import nb_expand_runs
from self_descriptive.generator._numpy_funcs import _expand_runs

# === Constants ===

# a stop value that is never reached
UNBOUNDED = 1 << 62

# === Auxiliary Functions ===


def _run_kernel(kernel, x1: str, x2: str, window_bits: int, num_letters: int):
    """
    Runs a kernel on a fresh seed window until the window is full or ``num_letters``
    are produced.

    """

    window = np.zeros(window_bits // 8, dtype=np.uint8)
    window[0] = 0b11
    letters_out = np.zeros(num_letters, dtype=np.int8)
    delta_out = np.zeros(num_letters, dtype=np.int8)
    state = kernel(
        window,
        0,
        1,
        2,
        np.array([int(letter) for letter in x1], dtype=np.int8),
        0,
        np.array([int(letter) for letter in x2], dtype=np.int8),
        0,
        0,
        0,
        0,
        num_letters,
        UNBOUNDED,
        letters_out,
        0,
        delta_out,
        0,
    )

    return state, window, letters_out, delta_out


# === Tests ===


@pytest.mark.parametrize(
    "x1, x2, window_bits, num_letters",
    [
        ("12", "1", 32, 40),  # Test 0: the window fills up before the target
        ("121", "12", 1024, 500),  # Test 1: the target is reached first
        ("2", "2", 256, 200),  # Test 2: only runs of length 2
        ("1", "1", 256, 200),  # Test 3: only runs of length 1 after the seed
    ],
)
def test_numpy_and_numba_kernels_agree(
    x1: str,
    x2: str,
    window_bits: int,
    num_letters: int,
) -> None:
    """
    This test checks whether the pure Python and the Numba kernel produce the same
    scalar state, window bits, and recorded letters.

    """

    numpy_result = _run_kernel(_expand_runs, x1, x2, window_bits, num_letters)
    numba_result = _run_kernel(nb_expand_runs, x1, x2, window_bits, num_letters)

    assert tuple(numpy_result[0]) == tuple(numba_result[0])
    for numpy_array, numba_array in zip(numpy_result[1:], numba_result[1:]):
        assert np.array_equal(numpy_array, numba_array)


def test_kernel_stops_when_the_window_is_full() -> None:
    """
    This test checks whether the kernel leaves room for a run of length 2 at the end of
    the window and records the letters as bits.

    """

    (read_index, frontier, *_), window, letters_out, _ = _run_kernel(
        _expand_runs,
        "12",
        "1",
        window_bits=16,
        num_letters=1_000,
    )

    assert 14 <= frontier <= 16
    assert read_index < frontier
    bits = np.unpackbits(window, bitorder="little")[:frontier]
    assert np.array_equal(bits[:2], [1, 1])
    assert np.array_equal(bits[2:] + 1, letters_out[2:frontier])
    assert not np.any(np.unpackbits(window, bitorder="little")[frontier:])
