"""
Module :mod:`analysis._sweep`

This module implements the sweep over all ordered pairs of director words up to a
given period that compares the empirical frequency of the letter 1 with the closed
form. The pairs are independent, so they can be processed by a pool of workers.

"""

# === Imports ===

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
from typing import List, Tuple

from tqdm import tqdm

from ..generator import count_letters, init_generator
from ..spectral import build_matrices, perron, theoretical_frequencies
from ..words import densities, get_validated_count, iter_director_words

# === Constants ===

# the maximum period of the director words, i.e., 126 words and 15876 pairs
MAX_SWEEP_PERIOD = 6

logger = logging.getLogger(__name__)

# === Models ===


@dataclass(frozen=True)
class SweepRow:
    """
    The comparison of theory and measurement for one pair of director words.

    Attributes
    ----------
    x1, x2 : :class:`str`
        The director words.
    p1, q2 : :class:`fractions.Fraction`
        Their densities.
    f1_theory : :class:`float`
        The frequency of the letter 1 by the closed form.
    f1_emp : :class:`float`
        The frequency of the letter 1 in the first ``n`` letters.
    alpha1, alpha2 : :class:`float`
        The eigenvalues of the transition matrix.
    primitive : :class:`bool`
        Whether ``0 < p1 < 1`` and ``0 < q2 < 1``.

    Properties
    ----------
    err : :class:`float`
        The absolute error ``|f1_emp - f1_theory|``.

    """

    x1: str
    x2: str
    p1: Fraction
    q2: Fraction
    f1_theory: float
    f1_emp: float
    alpha1: float
    alpha2: float
    primitive: bool

    @property
    def err(self) -> float:
        return abs(self.f1_emp - self.f1_theory)


# === Functions ===


def sweep_pair(pair: Tuple[str, str], n: int) -> SweepRow:
    """
    Evaluates a single pair of director words on the first ``n`` letters.

    """

    x1, x2 = pair
    pair_densities = densities(x1=x1, x2=x2)
    spectrum = perron(build_matrices(pair_densities))
    count1 = count_letters(init_generator(x1=x1, x2=x2), n=n)

    return SweepRow(
        x1=x1,
        x2=x2,
        p1=pair_densities.p1,
        q2=pair_densities.q2,
        f1_theory=theoretical_frequencies(pair_densities).f1,
        f1_emp=count1 / n,
        alpha1=spectrum.alpha1,
        alpha2=spectrum.alpha2,
        primitive=spectrum.primitive,
    )


def sweep(
    max_period: int,
    n: int,
    jobs: int = 1,
    progress: bool = False,
) -> List[SweepRow]:
    """
    Evaluates all ordered pairs of director words with periods up to ``max_period``.

    Parameters
    ----------
    max_period : :class:`int`
        The maximum period of the director words in ``[1, 6]``.
    n : :class:`int`
        The number of letters ``>= 1`` generated per pair.
    jobs : :class:`int`, default=``1``
        The number of worker processes. With ``1``, the pairs are evaluated in the
        current process.
    progress : :class:`bool`, default=``False``
        Whether to display a progress bar on the standard error.

    Returns
    -------
    rows : :class:`list` of :class:`SweepRow`
        The rows sorted lexicographically by ``(x1, x2)`` regardless of the order in
        which the workers finished.

    """

    max_period = get_validated_count(
        value=max_period,
        name="max_period",
        minimum=1,
        maximum=MAX_SWEEP_PERIOD,
    )
    n = get_validated_count(value=n, name="n", minimum=1)
    jobs = get_validated_count(value=jobs, name="jobs", minimum=1)

    words = [str(word) for word in iter_director_words(max_period=max_period)]
    pairs = [(x1, x2) for x1 in words for x2 in words]
    logger.info(
        "Sweeping %d pairs of director words with %d letters each on %d worker(s).",
        len(pairs),
        n,
        jobs,
    )

    worker = partial(sweep_pair, n=n)
    progress_bar = partial(
        tqdm,
        total=len(pairs),
        desc="Sweeping director pairs",
        disable=not progress,
        leave=False,
    )
    if jobs == 1:
        rows = list(progress_bar(map(worker, pairs)))

    else:
        with Pool(processes=jobs) as pool:
            rows = list(progress_bar(pool.imap_unordered(worker, pairs)))

    logger.info("Sweep finished with %d rows.", len(rows))
    return sorted(rows, key=lambda row: (row.x1, row.x2))
