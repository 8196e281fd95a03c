"""
Module :mod:`generator`

This module provides the generation of self-descriptive sequences ``u`` over
``{1, 2}`` directed by two periodic directors. The sequence is its own run-length
encoding: the ``k``-th run has the length ``u_k`` and its letter is taken from
``T1 = (x1)^ω`` if the run has length 1 and from ``T2 = (x2)^ω`` otherwise.

Besides the streaming engine that keeps only the letters produced but not yet read,
there are naive list-based generators that serve as test oracles.

"""

# === Imports ===

from ._class_interface import SelfDescriptiveSequence  # noqa: F401
from ._oracle import bjm_rule_generate, oracle_generate  # noqa: F401
from ._state import (  # noqa: F401
    SEED_LENGTH,
    SEED_LETTER,
    GeneratorState,
    RunEvent,
    RunSource,
    StreamConsumer,
    StreamConsumptionError,
    count_directing,
    count_letters,
    delta_prefix,
    init_generator,
    iter_run_events,
    next_run,
    take_letters,
    window_count1,
    window_letters,
)
