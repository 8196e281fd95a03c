"""
This test suite implements the tests for the module :mod:`blocks._residuals`.

"""

# === Imports ===

from fractions import Fraction as F

import pytest

from self_descriptive.blocks import (
    CountVector,
    max_residual_norm,
    recursion_residual,
    residual_norm,
    residual_table,
)
from self_descriptive.spectral import build_matrices
from self_descriptive.words import densities

# === Tests ===


@pytest.mark.parametrize(
    "x1, x2, expected",
    [
        ("12", "12", (F(0), F(0), F(0), F(0))),  # Test 0: exact densities
        ("121", "12", (F(-1, 3), F(1, 3), F(0), F(0))),  # Test 1: rounding of 2/3
        ("12", "1", (F(0), F(0), F(0), F(0))),  # Test 2: the BJM sequence
    ],
)
def test_first_residual(x1: str, x2: str, expected) -> None:
    """
    This test checks whether the residual ``e_0 = v_1 - A v_0`` is computed exactly.

    """

    table = residual_table(x1, x2, levels=2)
    _, e_0 = table[0]
    assert e_0 == expected
    assert all(isinstance(component, F) for component in e_0)


def test_residual_of_the_empty_word_is_the_next_count_vector() -> None:
    """
    This test checks whether the residual reduces to ``v_{n+1}`` if ``v_n`` vanishes
    since ``A`` is linear.

    """

    matrices = build_matrices(densities("121", "12"))
    v_next = CountVector(3, 1, 2, 4)
    e_n = recursion_residual(CountVector(0, 0, 0, 0), v_next=v_next, a=matrices)
    assert e_n == tuple(F(count) for count in v_next.as_tuple())
    assert residual_norm(e_n) == 4


def test_residual_table_layout() -> None:
    """
    This test checks whether the residual table has one row per level and leaves the
    residual of the last level empty.

    """

    table = residual_table("121", "12", levels=6)
    assert len(table) == 6
    assert [block.level for block, _ in table] == list(range(6))
    assert all(e_n is not None for _, e_n in table[:-1])
    assert table[-1][1] is None


@pytest.mark.parametrize(
    "x1, x2, bound",
    [
        ("12", "1", F(1, 2)),  # Test 0: the BJM sequence
        ("121", "12", F(1)),  # Test 1: p1 = 2/3 and q2 = 1/2
    ],
)
def test_residuals_stay_bounded(x1: str, x2: str, bound: F) -> None:
    """
    This test checks whether the residuals of the levels 1 to 30 stay within the known
    bounds even though the blocks grow exponentially.

    """

    table = residual_table(x1, x2, levels=32)
    assert max_residual_norm(table, first_level=1, last_level=30) <= bound


def test_residuals_are_bounded_by_the_periods(director_pairs_up_to_period_3) -> None:
    """
    This test checks for all the director pairs with periods up to 3 whether the
    residuals are bounded by ``max(|x1|, 2 |x2|)``.

    """

    for x1, x2 in director_pairs_up_to_period_3:
        table = residual_table(x1, x2, levels=21)
        bound = max(len(x1), 2 * len(x2))
        assert max_residual_norm(table, first_level=0, last_level=19) <= bound


def test_max_residual_norm_requires_residuals() -> None:
    """
    This test checks whether :func:`max_residual_norm` refuses levels without a
    residual.

    """

    table = residual_table("12", "1", levels=5)
    with pytest.raises(ValueError, match="Expected a residual for level 4"):
        max_residual_norm(table, first_level=0, last_level=4)

    with pytest.raises(ValueError, match="Expected 'last_level' to be >= 3"):
        max_residual_norm(table, first_level=3, last_level=2)


@pytest.mark.parametrize("x1, x2", [("12", "1"), ("121", "12")])
def test_residuals_do_not_grow_with_the_level(x1: str, x2: str) -> None:
    """
    This test checks whether the residuals of the levels 15 to 30 do not exceed the
    ones of the levels 1 to 15.

    """

    table = residual_table(x1, x2, levels=32)
    assert max_residual_norm(table, first_level=15, last_level=30) <= (
        max_residual_norm(table, first_level=1, last_level=15)
    )
