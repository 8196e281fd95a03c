"""
Module :mod:`words`

This module provides the periodic director words over ``{1, 2}`` together with their
exact letter densities ``p1`` and ``q2`` on which all the theoretical frequencies
depend.

"""

# === Imports ===

from ._director import (  # noqa: F401
    DensityPair,
    DirectorWord,
    as_director,
    densities,
    iter_director_words,
    parse_director,
)
from ._validate import (  # noqa: F401
    DirectorWordError,
    get_validated_checkpoints,
    get_validated_count,
)
