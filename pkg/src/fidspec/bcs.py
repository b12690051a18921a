"""Thermal states of a bulk s-wave BCS superconductor, per momentum mode.

Each (k, -k) pair contributes a 4-dimensional space spanned by
{empty, doubly occupied, spin up, spin dn}.  The thermal state factorizes
over momenta, so the fidelity operator between two (T, Delta) points is a
product of 4x4 k-fidelity operators: the charge 2x2 block couples empty and
doubly-occupied states, the two spin states are degenerate and diagonal.

The square-lattice dispersion eps_k = -2 t (cos kx + cos ky) is used with
t = 1; the gap is a constant s-wave amplitude, either fixed or solved from
the finite-temperature gap equation restricted to a cutoff shell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernel import psd_sqrt
from .tables import Table


@dataclass(frozen=True)
class BCSParams:
    """One thermodynamic point: temperature, gap amplitude, band filling."""

    T: float
    delta: float
    mu: float = -1.0
    grid_n: int = 64
    t: float = 1.0

    def __post_init__(self) -> None:
        if self.T <= 0:
            raise ValueError(f"temperature must be positive, got {self.T}")
        if self.delta < 0:
            raise ValueError(f"gap amplitude must be >= 0, got {self.delta}")
        if self.grid_n < 2:
            raise ValueError(f"k-grid needs at least 2 points per axis, got {self.grid_n}")


def k_grid(n: int) -> tuple[np.ndarray, np.ndarray]:
    """n x n momenta over [-pi, pi)^2, row-major (ky rows, kx fastest)."""
    k = -np.pi + 2.0 * np.pi * np.arange(n) / n
    ky, kx = np.meshgrid(k, k, indexing="ij")
    return kx.ravel(), ky.ravel()


def dispersion(kx, ky, t: float = 1.0) -> np.ndarray:
    return -2.0 * t * (np.cos(kx) + np.cos(ky))


@dataclass(frozen=True)
class KModeState:
    """Per-momentum 4x4 thermal state in the basis {0, updn, up, dn}."""

    eps_bar: float
    delta: float
    T: float
    E: float
    rho: np.ndarray
    k: tuple[float, float] | None = None

    @property
    def p_spin(self) -> float:
        """Weight of either single-occupied state (the two are degenerate)."""
        return float(self.rho[2, 2].real)


def k_mode_rho(eps_bar: float, delta: float, T: float, k: tuple[float, float] | None = None) -> KModeState:
    """Thermal 4x4 state of one momentum pair.

    The charge block Hamiltonian is [[0, -Delta], [-Delta, 2 eps_bar]] and
    both spin states sit at eps_bar.  The Boltzmann weights are computed
    with the minimum energy subtracted, so arbitrarily small temperatures
    are safe.
    """
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")
    e = math.hypot(eps_bar, delta)
    h_charge = np.array([[0.0, -delta], [-delta, 2.0 * eps_bar]])
    w, v = np.linalg.eigh(h_charge)
    energies = np.array([w[0], w[1], eps_bar, eps_bar])
    weights = np.exp(-(energies - energies.min()) / T)
    z = float(np.sum(weights))
    rho = np.zeros((4, 4))
    rho[:2, :2] = (v * (weights[:2] / z)) @ v.T
    rho[2, 2] = weights[2] / z
    rho[3, 3] = weights[3] / z
    return KModeState(eps_bar=float(eps_bar), delta=float(delta), T=float(T), E=float(e), rho=rho, k=k)


@dataclass(frozen=True)
class KFidelityResult:
    """Spectrum of one k-fidelity operator, plus the closed-form comparator."""

    k: tuple[float, float] | None
    lam: np.ndarray  # four eigenvalues, descending
    lambda_charge: tuple[float, float]
    lambda_spin: float
    fidelity_k: float
    eta_pm_closed_form: tuple[float, float] | None = None
    closed_form_deviation: float | None = None


def _charge_fidelity(a: KModeState, b: KModeState) -> np.ndarray:
    return np.linalg.svd(psd_sqrt(b.rho[:2, :2]) @ psd_sqrt(a.rho[:2, :2]), compute_uv=False)


def k_fidelity(a: KModeState, b: KModeState, closed_form: bool = False) -> KFidelityResult:
    """Fidelity-operator spectrum of two k-mode states, blockwise.

    The spin eigenvalues are sqrt(p_spin_a * p_spin_b), exactly degenerate.
    With ``closed_form=True`` the printed eta_+- expressions are evaluated
    and their deviation from the numeric charge eigenvalues recorded.
    """
    lam_charge = _charge_fidelity(a, b)
    lam_spin = math.sqrt(a.p_spin * b.p_spin)
    lam = np.sort(np.array([lam_charge[0], lam_charge[1], lam_spin, lam_spin]))[::-1]
    eta = None
    dev = None
    if closed_form:
        cf = closed_form_eta((a.eps_bar, a.delta, a.T), (b.eps_bar, b.delta, b.T))
        eta = (cf.eta_plus, cf.eta_minus)
        dev = cf.dev_sqrt_reading
    return KFidelityResult(
        k=a.k,
        lam=lam,
        lambda_charge=(float(lam_charge[0]), float(lam_charge[1])),
        lambda_spin=lam_spin,
        fidelity_k=float(np.sum(lam)),
        eta_pm_closed_form=eta,
        closed_form_deviation=dev,
    )


@dataclass(frozen=True)
class ClosedFormEta:
    """Verbatim evaluation of the printed charge-block matrix elements.

    ``dev_sqrt_reading`` compares {sqrt(eta_+), sqrt(eta_-)}/sqrt(D) against
    the numeric charge eigenvalues, ``dev_linear_reading`` compares
    {eta_+, eta_-}/sqrt(D); both readings of the printed eigenvalue formula
    are kept because the source is ambiguous.  Deviations are reported, not
    asserted away.
    """

    eta_plus: float
    eta_minus: float
    d_k: float
    dev_sqrt_reading: float
    dev_linear_reading: float


def _safe_ratio(num: float, e: float) -> float:
    return num / e if e > 0.0 else 0.0


def closed_form_eta(a_params: tuple[float, float, float], b_params: tuple[float, float, float]) -> ClosedFormEta:
    """Evaluate the printed alpha/beta/gamma/D expressions for two states.

    Each parameter triple is (eps_bar, delta, T).  The spin part
    1/sqrt(D_k) is exact; the charge part is a comparator only.
    """
    ea_, da, ta = a_params
    eb_, db, tb = b_params
    ea = math.hypot(ea_, da)
    eb = math.hypot(eb_, db)
    cha, sha = math.cosh(ea / ta), math.sinh(ea / ta)
    chb, shb = math.cosh(eb / tb), math.sinh(eb / tb)
    cos_ab = _safe_ratio(da * db + ea_ * eb_, ea * eb)
    ra, rb = _safe_ratio(ea_, ea), _safe_ratio(eb_, eb)
    pa, pb = _safe_ratio(da, ea), _safe_ratio(db, eb)

    alpha = (
        cha * chb
        + sha * shb * cos_ab
        + sha * chb * ra
        + shb * rb
        + (cha - 1.0) * shb * cos_ab * ra
    )
    gamma = (
        cha * chb
        + sha * shb * cos_ab
        - sha * chb * ra
        - shb * rb
        - (cha - 1.0) * shb * cos_ab * ra
    )
    beta = sha * chb * pa + shb * pb + (cha - 1.0) * shb * cos_ab * pa
    d_k = 2.0 * (1.0 + cha) * 2.0 * (1.0 + chb)
    disc = math.sqrt((alpha - gamma) ** 2 + 4.0 * beta**2)
    eta_plus = 0.5 * ((alpha + gamma) + disc)
    eta_minus = 0.5 * ((alpha + gamma) - disc)

    numeric = _charge_fidelity(k_mode_rho(ea_, da, ta), k_mode_rho(eb_, db, tb))
    sqrt_reading = np.sort([math.sqrt(max(eta_plus, 0.0)), math.sqrt(max(eta_minus, 0.0))])[::-1] / math.sqrt(d_k)
    linear_reading = np.sort([eta_plus, eta_minus])[::-1] / math.sqrt(d_k)
    return ClosedFormEta(
        eta_plus=eta_plus,
        eta_minus=eta_minus,
        d_k=d_k,
        dev_sqrt_reading=float(np.max(np.abs(sqrt_reading - numeric))),
        dev_linear_reading=float(np.max(np.abs(linear_reading - numeric))),
    )


@dataclass(frozen=True)
class GapResult:
    """Solution of the finite-temperature gap equation."""

    delta: float
    normal_phase: bool


def gap_solve(T: float, v: float, cutoff: float, grid_n: int = 64, mu: float = -1.0, t: float = 1.0) -> GapResult:
    """Solve Delta = (v/N) sum'_k Delta tanh(E_k / 2T) / (2 E_k) by bisection.

    The primed sum runs over |eps_bar_k| < cutoff.  Above T_c the bracket
    has no sign change and the normal phase (Delta = 0) is returned.
    """
    if v <= 0:
        raise ValueError(f"coupling must be positive, got {v}")
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")
    kx, ky = k_grid(grid_n)
    eps_bar = dispersion(kx, ky, t) - mu
    shell = np.abs(eps_bar) < cutoff
    eps_shell = eps_bar[shell]
    n_total = grid_n * grid_n
    if eps_shell.size == 0:
        return GapResult(delta=0.0, normal_phase=True)

    def gap_rhs(delta: float) -> float:
        e = np.hypot(eps_shell, delta)
        kernel = np.where(e < 1e-12, 1.0 / (4.0 * T), np.tanh(e / (2.0 * T)) / (2.0 * np.maximum(e, 1e-300)))
        return v / n_total * float(np.sum(kernel))

    if gap_rhs(0.0) <= 1.0:
        return GapResult(delta=0.0, normal_phase=True)
    lo, hi = 0.0, v
    while gap_rhs(hi) > 1.0:
        hi *= 2.0
        if hi > 1e6:
            raise RuntimeError("gap equation upper bracket not found")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if gap_rhs(mid) > 1.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-13 * max(1.0, hi):
            break
    return GapResult(delta=0.5 * (lo + hi), normal_phase=False)


MAP_COLUMNS = [
    "k_x", "k_y", "k_index",
    "lambda_charge_1", "lambda_charge_2", "lambda_spin", "fidelity_k",
]


def brillouin_map(pa: BCSParams, pb: BCSParams, closed_form: bool = True) -> Table:
    """k-fidelity spectrum over the full Brillouin zone grid.

    One row per momentum, ordered sequentially row by row.  The metadata
    records the worst closed-form comparator deviation under both readings
    of the printed eigenvalue formula.
    """
    if pa.grid_n != pb.grid_n:
        raise ValueError(f"grid mismatch: {pa.grid_n} vs {pb.grid_n}")
    if pa.t != pb.t or pa.mu != pb.mu:
        raise ValueError("both states must share dispersion and chemical potential")
    kx, ky = k_grid(pa.grid_n)
    eps_bar = dispersion(kx, ky, pa.t) - pa.mu
    rows = []
    dev_sqrt = 0.0
    dev_linear = 0.0
    for idx in range(len(kx)):
        a = k_mode_rho(eps_bar[idx], pa.delta, pa.T, k=(kx[idx], ky[idx]))
        b = k_mode_rho(eps_bar[idx], pb.delta, pb.T, k=(kx[idx], ky[idx]))
        res = k_fidelity(a, b)
        if closed_form:
            cf = closed_form_eta((a.eps_bar, a.delta, a.T), (b.eps_bar, b.delta, b.T))
            dev_sqrt = max(dev_sqrt, cf.dev_sqrt_reading)
            dev_linear = max(dev_linear, cf.dev_linear_reading)
        rows.append(
            [
                float(kx[idx]), float(ky[idx]), float(idx),
                res.lambda_charge[0], res.lambda_charge[1], res.lambda_spin, res.fidelity_k,
            ]
        )
    meta = {
        "model": "bcs",
        "kind": "brillouin_map",
        "T_a": pa.T, "T_b": pb.T,
        "delta_a": pa.delta, "delta_b": pb.delta,
        "mu": pa.mu, "t": pa.t, "grid_n": pa.grid_n,
        "dispersion": "-2 t (cos kx + cos ky)",
    }
    if closed_form:
        meta["closed_form_max_dev_sqrt_reading"] = dev_sqrt
        meta["closed_form_max_dev_linear_reading"] = dev_linear
        meta["closed_form_matching_reading"] = (
            "sqrt(eta)/sqrt(D)" if dev_sqrt <= dev_linear else "eta/sqrt(D)"
        )
    return Table(columns=list(MAP_COLUMNS), rows=rows, meta=meta)
