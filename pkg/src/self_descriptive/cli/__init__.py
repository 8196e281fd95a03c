"""
Module :mod:`cli`

This module provides the command line interface ``self-descriptive``.

"""

# === Imports ===

from ._commands import cli, main  # noqa: F401
from ._output import OutputError  # noqa: F401
from ._params import CheckpointsParam, CountParam, DirectorWordParam  # noqa: F401
