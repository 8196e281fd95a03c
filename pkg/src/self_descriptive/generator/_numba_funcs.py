"""
Module :mod:`generator._numba_funcs`

This module provides the Numba-based implementation of the run expansion kernel.

Depending on the runtime availability of Numba, the kernel is either compiled or
taken from the pure Python implementation.

"""

# === Imports ===

from .._utils import compile_kernel
from ._numpy_funcs import _expand_runs

# === Compilation ===

# NOTE: the pure Python kernel was written to be compatible with Numba
#       ``jit``-compilation, so there is no separate source here
nb_expand_runs = compile_kernel(_expand_runs)
