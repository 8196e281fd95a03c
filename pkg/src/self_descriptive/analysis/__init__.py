"""
Module :mod:`analysis`

This module provides the empirical side of the letter frequencies of self-descriptive
sequences:

- streamed frequencies of the letter 1 in ``u`` and ``δ`` at checkpoints
- the convergence of these frequencies towards the theoretical values
- the cutting of ``u`` into a slowly growing block prefix and a suffix ``g_n``
- the sweep over all pairs of director words up to a given period

"""

# === Imports ===

from ._cutting import CutSeries, CutState, cut_sequence  # noqa: F401
from ._frequencies import (  # noqa: F401
    SERIES_DELTA,
    SERIES_U,
    ConvergenceReport,
    FrequencyReport,
    FrequencyRow,
    convergence_report,
    default_checkpoints,
    directing_empirical,
    empirical_frequency,
    with_decay,
)
from ._sweep import MAX_SWEEP_PERIOD, SweepRow, sweep, sweep_pair  # noqa: F401
