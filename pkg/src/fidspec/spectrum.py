"""Quantities derived from a fidelity-operator spectrum.

Fidelity (the trace), log-spectrum, moments M_n = sum_i lambda_i^n, von
Neumann and Renyi entropies, and the finite-difference fidelity
susceptibility per eigenvalue and in total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import xlogy

#: Floor applied to eigenvalues before taking logarithms.  Entries at the
#: floor show up as -ln(1e-300) ~ 690.78 and are flagged, not hidden.
LOG_FLOOR = 1e-300

MAX_MOMENT_ORDER = 16


def _check_lambdas(lam) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)
    if lam.ndim != 1:
        raise ValueError(f"expected a 1-d list of eigenvalues, got shape {lam.shape}")
    if lam.size and float(np.min(lam)) < 0.0:
        raise ValueError(f"negative eigenvalue {float(np.min(lam)):.6e} in spectrum")
    return lam


def log_spectrum(lam) -> np.ndarray:
    """Elementwise -ln(lambda) with the eigenvalue floor, order preserved."""
    lam = _check_lambdas(lam)
    return -np.log(np.maximum(lam, LOG_FLOOR))


@dataclass(frozen=True)
class SpectrumResult:
    """A fidelity-operator spectrum with its derived scalars.

    ``lam`` is stored descending; ``fidelity`` is its sum; ``log_spectrum``
    holds -ln(lambda) (non-decreasing); ``floored`` marks entries clipped at
    the logarithm floor.
    """

    lam: np.ndarray
    fidelity: float
    log_spectrum: np.ndarray
    floored: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.lam)


def spectrum_result(lam) -> SpectrumResult:
    """Package a raw eigenvalue list into a :class:`SpectrumResult`."""
    lam = np.sort(_check_lambdas(lam))[::-1]
    return SpectrumResult(
        lam=lam,
        fidelity=float(np.sum(lam)),
        log_spectrum=log_spectrum(lam),
        floored=lam <= LOG_FLOOR,
    )


def moments(lam, n_max: int) -> np.ndarray:
    """Moments M_n = sum_i lambda_i^n for n = 1..n_max.

    Summation runs in descending-magnitude order so that M_1 coincides
    exactly with the fidelity computed from the sorted spectrum.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > MAX_MOMENT_ORDER:
        raise ValueError(f"n_max must be <= {MAX_MOMENT_ORDER}, got {n_max}")
    lam = np.sort(_check_lambdas(lam))[::-1]
    return np.array([float(np.sum(lam**n)) for n in range(1, n_max + 1)])


@dataclass(frozen=True)
class SpectrumStats:
    """Moments and entropies of one spectrum.

    ``moments[n-1]`` is M_n; ``renyi[n-2]`` is S_n = ln(M_n)/(1-n) for
    n >= 2; ``von_neumann`` is S_1 = -sum lambda ln lambda.
    """

    moments: np.ndarray
    renyi: np.ndarray
    von_neumann: float

    def entropy(self, n: int) -> float:
        """S_n with S_1 the von Neumann entropy."""
        if n == 1:
            return self.von_neumann
        return float(self.renyi[n - 2])


def entropies(lam, n_max: int) -> SpectrumStats:
    """Von Neumann and Renyi entropies up to order ``n_max``.

    Terms with lambda at or below the log floor contribute zero to S_1.
    """
    m = moments(lam, n_max)
    lam = _check_lambdas(lam)
    safe = np.where(lam > LOG_FLOOR, lam, 0.0)
    s1 = float(-np.sum(xlogy(safe, safe)))
    renyi = np.array([math.log(m[n - 1]) / (1 - n) for n in range(2, n_max + 1)])
    return SpectrumStats(moments=m, renyi=renyi, von_neumann=s1)


@dataclass(frozen=True)
class SusceptibilityPoint:
    """Second finite difference of a spectrum against its sweep parameter."""

    h: float
    delta: float
    chi_total: float
    chi_per_eigenvalue: np.ndarray
    chi_abs: float


def susceptibility(lam_minus, lam_zero, lam_plus, delta: float, h: float = math.nan) -> SusceptibilityPoint:
    """Finite-difference fidelity susceptibility from three spectra.

    The inputs are the descending spectra at parameter offsets -delta, 0 and
    +delta.  Eigenvalues are matched by sorted rank:

        chi_i = (lam_i(+d) - 2 lam_i(0) + lam_i(-d)) / d^2

    and ``chi_total`` is their sum (identical to the same stencil applied to
    the fidelity itself, by linearity).
    """
    lm = np.asarray(lam_minus, dtype=float)
    l0 = np.asarray(lam_zero, dtype=float)
    lp = np.asarray(lam_plus, dtype=float)
    if not (lm.shape == l0.shape == lp.shape):
        raise ValueError(
            f"spectra length mismatch: {lm.shape} / {l0.shape} / {lp.shape}"
        )
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    chi = (lp - 2.0 * l0 + lm) / delta**2
    total = float(np.sum(chi))
    return SusceptibilityPoint(
        h=h, delta=delta, chi_total=total, chi_per_eigenvalue=chi, chi_abs=abs(total)
    )
