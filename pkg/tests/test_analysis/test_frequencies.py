"""
This test suite implements the tests for the module :mod:`analysis._frequencies`.

"""

# === Imports ===

import numpy as np
import pytest

from self_descriptive.analysis import (
    SERIES_DELTA,
    SERIES_U,
    FrequencyReport,
    FrequencyRow,
    convergence_report,
    default_checkpoints,
    directing_empirical,
    empirical_frequency,
    with_decay,
)
from self_descriptive.generator import init_generator, take_letters

# === Constants ===

# the exact frequencies of the BJM sequence
BJM_F1 = (7.0 - np.sqrt(17.0)) / 4.0
BJM_DFREQ = (1.0 + np.sqrt(17.0)) / 8.0

# === Tests ===


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, (1,)),  # Test 0: below the first power of 10
        (999, (999,)),  # Test 1: just below the first power of 10
        (1_000, (1_000,)),  # Test 2: exactly the first power of 10
        (25_000, (1_000, 10_000, 25_000)),  # Test 3: in between powers of 10
        (100_000, (1_000, 10_000, 100_000)),  # Test 4: exactly a power of 10
    ],
)
def test_default_checkpoints(n: int, expected) -> None:
    """
    This test checks whether :func:`default_checkpoints` lists the powers of 10 from
    ``10^3`` on followed by ``n``.

    """

    assert default_checkpoints(n) == expected


@pytest.mark.parametrize(
    "x1, x2, n, expected",
    [
        ("121", "12", 9, 4),  # Test 0: u = 221112122
        ("12", "1", 10, 6),  # Test 1: u = 2211121112 (BJM)
        ("2", "2", 50, 0),  # Test 2: only 2s
        ("1", "1", 50, 48),  # Test 3: only 1s after the seed
    ],
)
def test_empirical_frequency_counts(x1: str, x2: str, n: int, expected: int) -> None:
    """
    This test checks whether :func:`empirical_frequency` counts the 1s of short
    prefixes correctly.

    """

    report = empirical_frequency(x1, x2, n=n)
    assert report.series == SERIES_U
    assert len(report) == 1
    row = report.rows[0]
    assert row.n == n
    assert row.count1 == expected
    assert row.emp == expected / n


def test_empirical_frequency_matches_materialised_counts(
    director_pairs_up_to_period_3,
) -> None:
    """
    This test checks whether the streamed counts at several checkpoints match the
    counts of the materialised prefix.

    """

    checkpoints = (7, 100, 1_234, 5_000)
    for x1, x2 in director_pairs_up_to_period_3[::5]:
        report = empirical_frequency(x1, x2, n=5_000, checkpoints=checkpoints)
        u = take_letters(init_generator(x1, x2), n=5_000)
        for row in report:
            assert row.count1 == int(np.count_nonzero(u[: row.n] == 1)), (x1, x2)


def test_constant_directors_error() -> None:
    """
    This test checks whether the error for the directors 1 and 1 is exactly ``2 / n``
    because only the seed ``22`` deviates from the frequency 1.

    """

    report = empirical_frequency("1", "1", n=10_000)
    assert report.theory == 1.0
    for row in report:
        assert row.err == pytest.approx(2.0 / row.n, rel=1e-12)


@pytest.mark.parametrize(
    "x1, x2, runs, expected",
    [
        ("121", "12", 6, 3),  # Test 0: δ = 211212
        ("121", "12", 1, 0),  # Test 1: only the seed run
        ("12", "1", 6, 4),  # Test 2: δ = 211211 (BJM)
    ],
)
def test_directing_empirical_counts(x1: str, x2: str, runs: int, expected: int) -> None:
    """
    This test checks whether :func:`directing_empirical` counts the 1s of short
    prefixes of the directing sequence correctly.

    """

    report = directing_empirical(x1, x2, runs=runs)
    assert report.series == SERIES_DELTA
    assert report.rows[-1].count1 == expected


def test_bjm_convergence() -> None:
    """
    This test checks whether the empirical frequencies of the BJM sequence approach
    the exact values, i.e., whether the error at ``10^7`` is within ``1e-3`` and
    smaller than the error at ``10^4``.

    """

    checkpoints = (10_000, 10_000_000)
    u_report = empirical_frequency("12", "1", n=10_000_000, checkpoints=checkpoints)
    assert u_report.theory == pytest.approx(BJM_F1, abs=1e-12)
    assert u_report.rows[-1].err <= 1e-3
    assert u_report.rows[-1].err < u_report.rows[0].err

    delta_report = directing_empirical(
        "12", "1", runs=10_000_000, checkpoints=checkpoints
    )
    assert delta_report.theory == pytest.approx(BJM_DFREQ, abs=1e-12)
    assert delta_report.rows[-1].err <= 1e-3
    assert delta_report.rows[-1].err < delta_report.rows[0].err


def test_frequencies_depend_on_densities_only() -> None:
    """
    This test checks whether two director pairs with equal densities but different
    words share the theoretical frequency and have close empirical frequencies.

    """

    first = empirical_frequency("12", "1", n=10_000_000)
    second = empirical_frequency("1122", "11", n=10_000_000)
    assert first.theory == second.theory
    assert abs(first.rows[-1].emp - second.rows[-1].emp) <= 2e-3


@pytest.mark.parametrize(
    "checkpoints, expected",
    [
        ([10, 5], ValueError("Expected the checkpoints to be strictly increasing")),
        ([10, 10], ValueError("Expected the checkpoints to be strictly increasing")),
        ([200], ValueError("Expected the checkpoints to not exceed n = 100")),
        ([0, 10], ValueError("Expected 'checkpoint' to be >= 1")),
        ([], ValueError("Expected at least one checkpoint")),
    ],
)
def test_invalid_checkpoints(checkpoints, expected) -> None:
    """
    This test checks whether invalid checkpoint schedules are rejected.

    """

    with pytest.raises(type(expected), match=str(expected)):
        empirical_frequency("12", "1", n=100, checkpoints=checkpoints)


def test_with_decay() -> None:
    """
    This test checks whether :func:`with_decay` fills in the ratios of consecutive
    errors and leaves them empty after a vanishing error.

    """

    rows = tuple(
        FrequencyRow(n=n, count1=count1, theory=0.5, series=SERIES_U)
        for n, count1 in [(10, 4), (20, 10), (40, 21), (80, 41)]
    )
    report = with_decay(FrequencyReport(series=SERIES_U, theory=0.5, rows=rows))

    decays = [row.decay for row in report]
    assert decays[0] is None
    assert decays[1] == 0.0
    assert decays[2] is None
    assert decays[3] == pytest.approx(0.5, rel=1e-12)


def test_convergence_report() -> None:
    """
    This test checks whether :func:`convergence_report` combines the reports of ``u``
    and ``δ`` and requires at least 2 checkpoints.

    """

    report = convergence_report("121", "12", n=20_000, checkpoints=[1_000, 20_000])
    assert [row.series for row in report.rows] == [SERIES_U] * 2 + [SERIES_DELTA] * 2
    assert report.u.rows[0].decay is None
    assert report.u.rows[1].decay is not None

    with pytest.raises(ValueError, match="Expected at least 2 checkpoints"):
        convergence_report("121", "12", n=500)
