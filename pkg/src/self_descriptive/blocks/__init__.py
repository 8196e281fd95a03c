"""
Module :mod:`blocks`

This module provides the block hierarchy of self-descriptive sequences. The runs are
recoded over ``{a, b, c, d}`` and ``u = 22 w_0 w_1 w_2 ...`` is cut into blocks where
each block ``w_{n+1}`` consists of the recoded runs produced by reading ``w_n``. The
count vectors ``v_n`` of the blocks follow ``v_{n+1} = A v_n + e_n`` with bounded
residuals ``e_n``.

"""

# === Imports ===

from ._hierarchy import (  # noqa: F401
    MAX_BLOCK_LETTERS,
    block_boundaries,
    block_counts,
    block_decompose,
    count_vector,
    iter_block_counts,
)
from ._recoding import BlockLevel, CountVector, RecodedLetter, recode_run  # noqa: F401
from ._residuals import (  # noqa: F401
    Residual,
    max_residual_norm,
    recursion_residual,
    residual_norm,
    residual_table,
)
