"""
Module :mod:`spectral._spectrum`

This module implements the spectral analysis of the transition matrix ``A`` and the
theoretical letter frequencies of a self-descriptive sequence directed by two periodic
directors, namely

- the closed form of the frequency ``f1`` of the letter 1 in terms of ``p1``, ``q2``,
    and the discriminant ``Δ``
- the frequency ``f1`` as the share of the letters of value 1 in the right Perron
    vector of ``A``
- the frequency of the letter 1 in the directing sequence
- the convergence of the normalised powers ``α1^(-n) A^n`` towards ``r ℓ``

The eigenvalues are the roots of the quadratic characteristic polynomial of the 2x2
reduction ``B`` and the Perron vectors of ``A`` are lifted from those of ``B``, so no
general eigensolver is involved.

"""

# === Imports ===

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from ..words import DensityPair, get_validated_count
from ._matrices import TransitionMatrix, build_matrices, discriminant

# === Constants ===

# the relative threshold below which ``ℓ · r`` is considered to vanish
_PAIRING_RTOL = 1e-14

# the indices of the recoded letters of value 1 in ``(a, b, c, d)``
_VALUE_ONE_INDICES = (0, 2)

# === Exceptions ===


class SpectrumUnavailableError(ValueError):
    """
    Exception raised when the Perron vectors or a strictly dominant eigenvalue that a
    computation relies on do not exist for the given densities.

    """

    pass


# === Models ===


@dataclass(frozen=True)
class Spectrum:
    """
    The spectral decomposition of the transition matrix ``A``.

    Attributes
    ----------
    delta : :class:`fractions.Fraction`
        The discriminant ``Δ``.
    alpha1, alpha2 : :class:`float`
        The eigenvalues ``(p1 + 2 q2 ± √Δ) / 2`` of ``B`` which are the non-zero
        eigenvalues of ``A`` (``alpha2`` may be zero).
    r : :class:`numpy.ndarray` of shape (4,) or ``None``
        The right Perron vector of ``A`` ordered ``(a, b, c, d)``. ``None`` if it is
        unavailable.
    l : :class:`numpy.ndarray` of shape (4,) or ``None``
        The left Perron vector of ``A`` scaled such that ``ℓ · r = 1``. ``None`` if it
        is unavailable.
    r_freq : :class:`numpy.ndarray` of shape (4,) or ``None``
        ``r`` rescaled to a component sum of 1, i.e., the limit frequencies of the
        recoded letters ``a``, ``b``, ``c``, and ``d``. ``None`` if it is unavailable.
    primitive : :class:`bool`
        Whether ``B`` is entrywise positive, i.e., ``0 < p1 < 1`` and ``0 < q2 < 1``.

    Properties
    ----------
    available : :class:`bool`
        Whether the Perron vectors were computed. This requires a simple positive
        Perron eigenvalue (``Δ > 0``) and a non-vanishing ``ℓ · r``.
    dominant : :class:`bool`
        Whether ``alpha1`` strictly dominates ``|alpha2|``.

    """

    delta: Fraction
    alpha1: float
    alpha2: float
    r: Optional[np.ndarray]
    l: Optional[np.ndarray]  # noqa: E741
    r_freq: Optional[np.ndarray]
    primitive: bool

    @property
    def available(self) -> bool:
        return self.r is not None

    @property
    def dominant(self) -> bool:
        return self.alpha1 > abs(self.alpha2)


@dataclass(frozen=True)
class Frequencies:
    """
    The theoretical letter frequencies of a self-descriptive sequence.

    Attributes
    ----------
    f1 : :class:`float`
        The frequency of the letter 1 in ``u``.
    dfreq : :class:`float`
        The frequency of the letter 1 in the directing sequence ``δ``.

    Properties
    ----------
    f2 : :class:`float`
        The frequency ``1 - f1`` of the letter 2 in ``u``.

    """

    f1: float
    dfreq: float

    @property
    def f2(self) -> float:
        return 1.0 - self.f1


# === Auxiliary Functions ===


def _larger_candidate(
    first: Tuple[float, float],
    second: Tuple[float, float],
) -> np.ndarray:
    """
    Picks the eigenvector candidate with the larger norm and orients it to have a
    non-negative component sum.

    """

    first_array = np.array(first, dtype=np.float64)
    second_array = np.array(second, dtype=np.float64)
    vector = (
        first_array
        if np.linalg.norm(first_array) >= np.linalg.norm(second_array)
        else second_array
    )
    if vector.sum() < 0.0:
        vector = -vector

    return vector


def _eigenvalues(m: TransitionMatrix) -> Tuple[Fraction, float, float]:
    """
    Computes ``Δ`` and the eigenvalues ``α1 >= α2`` of ``B``.

    """

    delta = discriminant(m.densities)
    trace = float(m.trace)
    root = float(np.sqrt(float(delta)))

    return delta, 0.5 * (trace + root), 0.5 * (trace - root)


# === Functions ===


def f1_closed(d: DensityPair) -> float:
    """
    Computes the frequency of the letter 1 by the closed form

    ``f1 = (1 - q2) (p1 + 2 q2 + √Δ) / (2 + √Δ - p1)``.

    Parameters
    ----------
    d : :class:`DensityPair`
        The densities ``p1`` and ``q2``.

    Returns
    -------
    f1 : :class:`float`
        The frequency in ``[0, 1]``.

    """

    root = float(np.sqrt(float(discriminant(d))))
    p1, q2 = float(d.p1), float(d.q2)

    return (1.0 - q2) * (p1 + 2.0 * q2 + root) / (2.0 + root - p1)


def f1_closed_alternate(d: DensityPair) -> float:
    """
    Computes the frequency of the letter 1 by the closed form

    ``f1 = 4 (1 - q2) / (4 - 2 q2 - p1 + √Δ)``

    which is algebraically equal to the one of :func:`f1_closed`.

    """

    root = float(np.sqrt(float(discriminant(d))))
    p1, q2 = float(d.p1), float(d.q2)

    return 4.0 * (1.0 - q2) / (4.0 - 2.0 * q2 - p1 + root)


def perron(m: TransitionMatrix) -> Spectrum:
    """
    Computes the eigenvalues and the Perron vectors of the transition matrix ``A``.

    Parameters
    ----------
    m : :class:`TransitionMatrix`
        The transition matrices.

    Returns
    -------
    spectrum : :class:`Spectrum`
        The spectral decomposition. Its Perron vectors are ``None`` if ``Δ = 0`` or if
        ``ℓ · r`` vanishes.

    Notes
    -----
    ``A`` maps a count vector ``(n_a, n_b, n_c, n_d)`` to
    ``(p1 x, p2 x, 2 q1 y, 2 q2 y)`` with ``x = n_a + n_c`` and ``y = n_b + n_d``, so
    ``A`` factors through ``B`` and its non-zero eigenvalues are those of ``B``.
    With the right eigenvector ``(s, t)`` of ``B``, the right eigenvector of ``A`` is

    ``r = (p1 s, p2 s, 2 q1 t, 2 q2 t)``

    and with the left eigenvector ``(x, y)`` of ``B``, the left eigenvector of ``A`` is

    ``ℓ = (x, y, x, y)``.

    Both eigenvectors of ``B`` are taken from the rows (columns) of ``B - α1 I``
    whichever gives the candidate with the larger norm.

    """

    d = m.densities
    delta, alpha1, alpha2 = _eigenvalues(m)
    primitive = 0 < d.p1 < 1 and 0 < d.q2 < 1

    r = l = r_freq = None
    if delta > 0 and alpha1 > 0.0:
        p1, p2 = float(d.p1), float(d.p2)
        q1, q2 = float(d.q1), float(d.q2)
        s, t = _larger_candidate(
            (2.0 * q1, alpha1 - p1),
            (alpha1 - 2.0 * q2, p2),
        )
        x, y = _larger_candidate(
            (p2, alpha1 - p1),
            (alpha1 - 2.0 * q2, 2.0 * q1),
        )

        r_candidate = np.array([p1 * s, p2 * s, 2.0 * q1 * t, 2.0 * q2 * t])
        l_candidate = np.array([x, y, x, y])
        pairing = float(l_candidate @ r_candidate)
        scale = np.linalg.norm(l_candidate) * np.linalg.norm(r_candidate)
        if pairing > _PAIRING_RTOL * scale:
            r = r_candidate
            l = l_candidate / pairing  # noqa: E741
            r_freq = r_candidate / r_candidate.sum()

    return Spectrum(
        delta=delta,
        alpha1=alpha1,
        alpha2=alpha2,
        r=r,
        l=l,
        r_freq=r_freq,
        primitive=primitive,
    )


def f1_eigen(d: DensityPair) -> float:
    """
    Computes the frequency of the letter 1 as the limit share ``r_a + r_c`` of the
    recoded letters of value 1 in the normalised right Perron vector of ``A``.

    If the Perron vector is unavailable, the closed form :func:`f1_closed` is returned.

    """

    spectrum = perron(build_matrices(d))
    if spectrum.r_freq is None:
        return f1_closed(d)

    return float(spectrum.r_freq[list(_VALUE_ONE_INDICES)].sum())


def directing_freq(d: DensityPair, f1: float) -> float:
    """
    Computes the frequency of the letter 1 in the directing sequence ``δ`` as

    ``p1 f1 + (1 - q2) (1 - f1)``

    since the runs of length 1, which are read at the letters 1 of ``u``, draw their
    letters from ``T1`` and the runs of length 2 draw them from ``T2``.

    Parameters
    ----------
    d : :class:`DensityPair`
        The densities ``p1`` and ``q2``.
    f1 : :class:`float`
        The frequency of the letter 1 in ``u``.
        It must be in ``[0, 1]``.

    Returns
    -------
    dfreq : :class:`float`
        The frequency in ``[0, 1]``.

    """

    f1 = float(f1)
    if not 0.0 <= f1 <= 1.0:
        raise ValueError(f"Expected 'f1' to be in [0, 1] but got {f1}.")

    return float(d.p1) * f1 + float(d.q1) * (1.0 - f1)


def power_convergence(m: TransitionMatrix, s: Spectrum, n: int) -> float:
    """
    Computes the max-norm deviation ``max |α1^(-n) A^n - r ℓ|`` over all the entries.

    Parameters
    ----------
    m : :class:`TransitionMatrix`
        The transition matrices.
    s : :class:`Spectrum`
        The spectrum of ``m``.
    n : :class:`int`
        The power ``>= 0``.

    Returns
    -------
    deviation : :class:`float`
        The deviation which decays like ``|α2 / α1|^n``.

    Raises
    ------
    SpectrumUnavailableError
        If the Perron vectors are unavailable or ``α1`` does not strictly dominate
        ``|α2|``.

    """

    n = get_validated_count(value=n, name="n")
    if not s.available or not s.dominant:
        raise SpectrumUnavailableError(
            f"The normalised powers of A do not converge to r ℓ for the densities "
            f"p1 = {m.densities.p1} and q2 = {m.densities.q2} (α1 = {s.alpha1}, "
            f"α2 = {s.alpha2})."
        )

    power = np.linalg.matrix_power(m.a_float, n) / s.alpha1**n
    limit = np.outer(s.r, s.l)

    return float(np.abs(power - limit).max())


def theoretical_frequencies(d: DensityPair) -> Frequencies:
    """
    Computes the theoretical frequencies of the letter 1 in ``u`` and ``δ`` from the
    closed form.

    """

    f1 = f1_closed(d)
    # rounding can push the closed form marginally outside of [0, 1]
    f1 = min(max(f1, 0.0), 1.0)

    return Frequencies(f1=f1, dfreq=directing_freq(d, f1=f1))
