"""
This test suite implements the tests for the module :mod:`analysis._cutting`.

"""

# === Imports ===

import numpy as np
import pytest

from self_descriptive.analysis import CutSeries, _cutting, cut_sequence
from self_descriptive.generator import init_generator, take_letters
from self_descriptive.spectral import f1_closed
from self_descriptive.words import densities

# === Tests ===


@pytest.mark.parametrize(
    "position, expected_l, expected_prefix_len, expected_g_len",
    [
        (0, 0, 2, 0),  # Test 0: the seed covers the prefix
        (1, 0, 2, 0),  # Test 1: the seed covers the prefix
        (10, 0, 2, 9),  # Test 2: before the first increment
        (17, 0, 2, 16),  # Test 3: the last position with the cut index 0
        (18, 1, 4, 15),  # Test 4: the first position with the cut index 1
        (39, 1, 4, 36),  # Test 5: the last position with the cut index 1
        (40, 2, 6, 35),  # Test 6: the first position with the cut index 2
        (87, 3, 9, 79),  # Test 7: the first position with the cut index 3
        (100, 3, 9, 92),  # Test 8
        (153, 4, 12, 142),  # Test 9: the first position with the cut index 4
    ],
)
def test_bjm_cuts(
    position: int,
    expected_l: int,
    expected_prefix_len: int,
    expected_g_len: int,
) -> None:
    """
    This test checks whether the cut of the BJM sequence follows the block starts
    ``2, 4, 6, 9, 12, ...``.

    """

    (state,) = cut_sequence("12", "1", n=200, positions=[position])
    assert state.n == position
    assert state.l == expected_l
    assert state.prefix_len == expected_prefix_len
    assert state.g_len == expected_g_len


def test_cut_series() -> None:
    """
    This test checks whether the series of all the cuts starts with the cut index 0,
    has non-decreasing cut indices, and agrees with the cuts at single positions.

    """

    n = 5_000
    series = cut_sequence("121", "12", n=n)
    assert isinstance(series, CutSeries)
    assert len(series) == n
    assert series.l[0] == 0
    assert np.all(np.diff(series.l) >= 0)
    assert np.all(np.diff(series.l) <= 1)
    assert np.all(np.diff(series.prefix_len) >= 0)
    assert series.g_len[100] > series.g_len[10]

    positions = [0, 1, 17, 256, 1_000, 4_999]
    expected = cut_sequence("121", "12", n=n, positions=positions)
    assert series.states(positions) == expected


def test_streamed_cuts_match_the_series(director_pairs_up_to_period_3) -> None:
    """
    This test checks whether the cuts at selected positions, which are computed by
    streaming, agree with the series of all the cuts for every pair of director words
    with periods up to 3, also for unsorted and repeated positions.

    """

    n = 2_000
    positions = [1_999, 0, 300, 17, 300, 1_024, 5]
    for x1, x2 in director_pairs_up_to_period_3:
        series = cut_sequence(x1, x2, n=n)
        assert isinstance(series, CutSeries)
        assert np.all(np.diff(series.l) <= 1)
        assert cut_sequence(x1, x2, n=n, positions=positions) == series.states(
            positions
        )


def test_streamed_cuts_count_the_suffix() -> None:
    """
    This test checks whether the number of 1s in ``g_n`` of the streamed cuts equals
    the number of 1s in the corresponding slice of the materialised prefix.

    """

    n = 10_000
    u = take_letters(init_generator(x1="12", x2="1"), n=n)
    positions = list(range(0, n, 97))
    for state in cut_sequence("12", "1", n=n, positions=positions):
        g_start = state.n + 1 - state.g_len
        assert g_start == min(state.prefix_len, state.n + 1)
        assert state.g_count1 == np.count_nonzero(u[g_start : state.n + 1] == 1)


def test_streamed_cuts_do_not_materialise_letters(monkeypatch) -> None:
    """
    This test checks whether the cuts at selected positions are computed without
    materialising the prefix of ``u``.

    """

    def refuse_letters(*args, **kwargs):
        raise AssertionError("The prefix must not be materialised.")

    monkeypatch.setattr(_cutting, "take_letters", refuse_letters)

    n = 10**6
    (state,) = cut_sequence("12", "1", n=n, positions=[n - 1])
    assert state.l >= 1
    assert state.prefix_len ** 2 <= n
    assert state.g_len == n - state.prefix_len


def test_empty_suffix_frequency() -> None:
    """
    This test checks whether the frequency of an empty suffix is ``nan``.

    """

    (state,) = cut_sequence("12", "1", n=10, positions=[0])
    assert state.g_len == 0
    assert np.isnan(state.g_freq)


def test_suffix_approaches_the_frequency() -> None:
    """
    This test checks whether the suffix ``g_n`` keeps growing and its frequency of the
    letter 1 approaches ``f1``.

    """

    n = 1_000_000
    (state,) = cut_sequence("12", "1", n=n, positions=[n - 1])
    assert state.g_len > 1_000
    assert state.prefix_len ** 2 <= n
    assert abs(state.g_freq - f1_closed(densities("12", "1"))) <= 5e-2


def test_invalid_position() -> None:
    """
    This test checks whether positions beyond the prefix are rejected.

    """

    with pytest.raises(ValueError, match="Expected 'position' to be <= 99"):
        cut_sequence("12", "1", n=100, positions=[100])
