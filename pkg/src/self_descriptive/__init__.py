"""
Package ``self_descriptive``

This package contains the generation and analysis of self-descriptive sequences over
``{1, 2}`` whose runs take their letters from two periodic director words, together
with the exact theoretical letter frequencies of these sequences.

"""

# === Imports ===

import os as _os

from .generator import (  # noqa: F401
    SelfDescriptiveSequence,
    init_generator,
    oracle_generate,
    take_letters,
)
from .spectral import (  # noqa: F401
    f1_closed,
    f1_eigen,
    theoretical_frequencies,
)
from .words import DensityPair, DirectorWord, densities, parse_director  # noqa: F401

# === Package Metadata ===

_AUTHOR_FILE_PATH = _os.path.join(_os.path.dirname(__file__), "AUTHORS.txt")
_VERSION_FILE_PATH = _os.path.join(_os.path.dirname(__file__), "VERSION.txt")

with open(_AUTHOR_FILE_PATH, "r") as author_file:
    __author__ = author_file.read().strip()

with open(_VERSION_FILE_PATH, "r") as version_file:
    __version__ = version_file.read().strip()
