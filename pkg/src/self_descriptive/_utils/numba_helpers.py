"""
Module :mod:`_utils.numba_helpers`

This module implements auxiliary functionalities to handle Numba-related tasks, such as

- checking whether Numba ``jit``-compilation has been explicitly specified to take no
    effect, e.g., for test coverage of the pure Python kernels
- compiling a kernel if Numba is available and falling back to the plain Python
    function otherwise

"""

# === Imports ===

import logging
import os
from enum import Enum
from typing import Callable, TypeVar

# === Types ===

_F = TypeVar("_F", bound=Callable)

# === Models ===


class NumbaJitActions(Enum):
    """
    Specifies the possible actions that can be taken regarding Numba
    ``jit``-compilation.

    """

    NORMAL = "0"
    DEACTIVATE = "1"


# === Constants ===

# the runtime argument that is used to specify that Numba ``jit``-compilation should
# take no effect
NUMBA_NO_JIT_ARGV = "--no-jit"

# the environment variable that is used to specify that Numba ``jit``-compilation should
# take no effect
NUMBA_NO_JIT_ENV_KEY = "CUSTOM_NUMBA_NO_JIT"

logger = logging.getLogger(__name__)

# === Functions ===


def do_numba_normal_jit_action() -> bool:
    """
    Whether the environment specifies that Numba ``jit``-compilation should take effect
    in the current runtime environment.

    """

    return (
        os.environ.get(NUMBA_NO_JIT_ENV_KEY, NumbaJitActions.NORMAL.value)
        == NumbaJitActions.NORMAL.value
    )


def no_jit(*args, **kwargs) -> Callable:
    """
    Fake decorator that can be used to make sure that Numba ``jit``-compilation has no
    effect.

    Parameters
    ----------
    args : :class:`tuple`
        The fake positional arguments.
    kwargs : :class:`dict`
        The fake keyword arguments.

    Returns
    -------
    decorator : :class:`Callable`
        A decorator that returns the decorated function unchanged.

    """

    def decorator(func: _F) -> _F:
        return func

    return decorator


def compile_kernel(func: _F) -> _F:
    """
    Compiles a kernel written in the Numba-compatible subset of Python and NumPy in
    ``nopython`` mode with caching.

    If Numba is not installed or the compilation was deactivated via the environment
    variable ``CUSTOM_NUMBA_NO_JIT``, the function itself is returned so that the same
    source serves as the pure Python implementation.

    Parameters
    ----------
    func : :class:`Callable`
        The kernel to compile.

    Returns
    -------
    kernel : :class:`Callable`
        The compiled kernel or ``func`` itself.

    """

    try:
        if do_numba_normal_jit_action():  # pragma: no cover
            from numba import jit
        else:
            jit = no_jit  # type: ignore

    except ImportError:  # pragma: no cover
        logger.debug(
            "Numba is not available, '%s' runs as pure Python.", func.__name__
        )
        return func

    return jit(nopython=True, cache=True)(func)
