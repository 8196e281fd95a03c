"""
Module :mod:`spectral`

This module provides the theory of the letter frequencies of self-descriptive
sequences directed by two periodic directors. Everything depends only on the densities
``p1`` and ``q2`` of the director words:

- the transition matrices ``A`` (4x4) and ``B`` (2x2) with exact rational entries
- the discriminant ``Δ = (p1 + 2 q2)^2 - 8 (p1 + q2 - 1)``
- the frequency ``f1`` of the letter 1 by closed form and by the Perron vector of ``A``
- the frequency of the letter 1 in the directing sequence

"""

# === Imports ===

from ._matrices import TransitionMatrix, build_matrices, discriminant  # noqa: F401
from ._spectrum import (  # noqa: F401
    Frequencies,
    Spectrum,
    SpectrumUnavailableError,
    directing_freq,
    f1_closed,
    f1_closed_alternate,
    f1_eigen,
    perron,
    power_convergence,
    theoretical_frequencies,
)
