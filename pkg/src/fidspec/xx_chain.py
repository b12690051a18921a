"""Reduced density matrices of L contiguous spins of the infinite XX chain.

The ground-state block state at transverse field h is Gaussian in the
Jordan-Wigner fermions, so it is fully determined by the antisymmetric
Majorana correlation matrix

    B = G (x) [[0, 1], [-1, 0]],   G[i, j] = g_{i-j},

with the field entering through phi_c = arccos(h):

    g_0 = 2 phi_c / pi - 1,    g_l = (2 / (l pi)) sin(l phi_c).

Bringing B to canonical form gives mode amplitudes nu_l; the block state is
materialized as an explicit 2^L x 2^L matrix in one fixed Majorana
representation, so states at two different fields live in a common basis and
their fidelity operator can be diagonalized directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernel import (
    CanonicalModes,
    ContractViolation,
    antisym_canonical,
    fidelity_op_spectrum_raw,
)
from .spectrum import SpectrumResult, entropies, spectrum_result, susceptibility
from .tables import Table

MAX_BLOCK = 8  # 256x256 states; fidelity cost grows as ~2^(3L)

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])

_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)
_ID = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class ChainParams:
    """Transverse field h in [0, 1) and block length L."""

    h: float
    L: int

    def __post_init__(self) -> None:
        if not (0.0 <= self.h < 1.0):
            raise ValueError(f"h must satisfy 0 <= h < 1 (critical field), got {self.h}")
        if not (1 <= self.L <= MAX_BLOCK):
            raise ValueError(f"L must be in 1..{MAX_BLOCK}, got {self.L}")


@dataclass(frozen=True)
class ToeplitzCorrelation:
    """Correlators g_l, the Toeplitz matrix G and the Majorana matrix B."""

    g: np.ndarray
    G: np.ndarray
    B: np.ndarray

    @property
    def L(self) -> int:
        return len(self.g)


def correlation_matrix(p: ChainParams) -> ToeplitzCorrelation:
    """Thermodynamic-limit block correlations of the XX chain at field h."""
    phi_c = np.arccos(p.h)
    g = np.empty(p.L)
    g[0] = 2.0 * phi_c / np.pi - 1.0
    for l in range(1, p.L):
        g[l] = 2.0 * np.sin(l * phi_c) / (l * np.pi)
    idx = np.arange(p.L)
    big_g = g[np.abs(idx[:, None] - idx[None, :])]
    return ToeplitzCorrelation(g=g, G=big_g, B=np.kron(big_g, J2))


@dataclass(frozen=True)
class MajoranaRep:
    """Explicit 2^L x 2^L Majorana matrices c_1 .. c_2L.

    Jordan-Wigner strings act on lower site indices:
    c_{2l-1} = Z^(l-1) X I..., c_{2l} = Z^(l-1) Y I...  All entries are in
    {0, +-1, +-i} exactly, so the Clifford relations hold in exact
    arithmetic.
    """

    L: int
    C: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return 2**self.L


def majorana_reps(L: int) -> MajoranaRep:
    """Build the 2L Majorana operators of an L-site block."""
    if not (1 <= L <= MAX_BLOCK):
        raise ValueError(f"L must be in 1..{MAX_BLOCK} (memory guard), got {L}")
    ops = []
    for l in range(L):
        for tail in (_SX, _SY):
            factors = [_SZ] * l + [tail] + [_ID] * (L - 1 - l)
            m = factors[0]
            for f in factors[1:]:
                m = np.kron(m, f)
            ops.append(m)
    return MajoranaRep(L=L, C=tuple(ops))


@dataclass(frozen=True)
class BlockState:
    """A block density matrix together with the modes that built it."""

    rho: np.ndarray
    modes: CanonicalModes


def rho_from_modes(modes: CanonicalModes, rep: MajoranaRep) -> np.ndarray:
    """Assemble the Gaussian block state from canonical modes.

    With d = V c and <d_{2l} d_{2l+1}> = i nu_l, the unique state with these
    two-point functions is

        rho = prod_l (I - i nu_l d_{2l} d_{2l+1}) / 2,

    giving occupation (1 - nu_l)/2 per mode.
    """
    if modes.n_modes != rep.L:
        raise ContractViolation(
            f"mode count {modes.n_modes} does not match representation L={rep.L}"
        )
    c_stack = np.stack(rep.C)
    d = np.tensordot(modes.V, c_stack, axes=(1, 0))
    rho = np.eye(rep.dim, dtype=complex)
    for l, nu in enumerate(modes.nu):
        factor = 0.5 * (np.eye(rep.dim, dtype=complex) - 1j * nu * d[2 * l] @ d[2 * l + 1])
        rho = rho @ factor
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def rho_from_majorana_correlations(b: np.ndarray, rep: MajoranaRep) -> BlockState:
    """Block state from an arbitrary Majorana correlation matrix B."""
    if b.shape[0] != 2 * rep.L:
        raise ContractViolation(
            f"B has dimension {b.shape[0]}, representation needs {2 * rep.L}"
        )
    modes = antisym_canonical(b)
    return BlockState(rho=rho_from_modes(modes, rep), modes=modes)


def block_density_matrix(tc: ToeplitzCorrelation, rep: MajoranaRep) -> BlockState:
    """Reduced density matrix of an L-spin block from its correlations."""
    if tc.L != rep.L:
        raise ContractViolation(f"correlation L={tc.L} but representation L={rep.L}")
    return rho_from_majorana_correlations(tc.B, rep)


def mode_spectrum(modes: CanonicalModes | np.ndarray) -> np.ndarray:
    """All 2^L products prod_l (1 +- nu_l)/2, sorted descending."""
    nu = modes.nu if isinstance(modes, CanonicalModes) else np.asarray(modes, dtype=float)
    if len(nu) > MAX_BLOCK:
        raise ValueError(f"at most {MAX_BLOCK} modes supported, got {len(nu)}")
    spec = np.array([1.0])
    for n in nu:
        spec = np.outer(spec, [(1.0 + n) / 2.0, (1.0 - n) / 2.0]).ravel()
    return np.sort(spec)[::-1]


def mode_entropy(nu: np.ndarray) -> float:
    """Von Neumann entropy from the L mode amplitudes alone (L-term sum)."""
    nu = np.asarray(nu, dtype=float)
    s = 0.0
    for p in np.concatenate([(1.0 + nu) / 2.0, (1.0 - nu) / 2.0]):
        if p > 0.0:
            s -= p * np.log(p)
    return float(s)


def xx_fidelity_spectrum(h1: float, h2: float, L: int, rep: MajoranaRep | None = None) -> SpectrumResult:
    """Fidelity-operator spectrum between block states at two fields.

    Both states are built in the same Majorana representation, so the
    fidelity operator is an ordinary matrix function of the two explicit
    density matrices.  With h1 == h2 this reduces to the entanglement
    spectrum of the block.
    """
    if rep is None:
        rep = majorana_reps(L)
    rho1 = block_density_matrix(correlation_matrix(ChainParams(h=h1, L=L)), rep).rho
    if h1 == h2:
        # F(rho, rho) = rho exactly; evaluating it spectrally (instead of
        # through sqrt(sqrt(rho) rho sqrt(rho))) keeps eigenvalues below
        # sqrt(machine eps) from being squared away.
        lam = np.clip(np.linalg.eigvalsh(rho1).real, 0.0, None)
        return spectrum_result(lam)
    rho2 = block_density_matrix(correlation_matrix(ChainParams(h=h2, L=L)), rep).rho
    return spectrum_result(fidelity_op_spectrum_raw(rho1, rho2))


@dataclass(frozen=True)
class XXSweepSpec:
    """Grid description for :func:`xx_sweep`.

    Either ``pairs`` lists explicit (h1, h2, L) evaluations (all with the
    same L so rows have fixed arity), or ``h_grid``/``delta_h``/``L_values``
    describe a susceptibility sweep with the three-point stencil
    (h - delta, h, h + delta) at every grid field.
    """

    pairs: tuple[tuple[float, float, int], ...] | None = None
    h_grid: tuple[float, ...] | None = None
    delta_h: float = 0.01
    L_values: tuple[int, ...] = ()
    n_max: int = 5


def _spectrum_columns(L: int, n_max: int) -> list[str]:
    dim = 2**L
    cols = [f"lambda_{i + 1}" for i in range(dim)]
    cols += [f"log_lambda_{i + 1}" for i in range(dim)]
    cols += [f"M_{n}" for n in range(1, n_max + 1)]
    cols += [f"S_{n}" for n in range(1, n_max + 1)]
    return cols


def _spectrum_values(res: SpectrumResult, n_max: int) -> list[float]:
    stats = entropies(res.lam, n_max)
    values = list(res.lam) + list(res.log_spectrum) + list(stats.moments)
    values += [stats.von_neumann] + list(stats.renyi)
    return [float(v) for v in values]


def xx_pair_sweep(pairs, n_max: int = 5) -> Table:
    """Spectrum table for explicit (h1, h2, L) evaluations, one row each."""
    pairs = [(float(h1), float(h2), int(L)) for h1, h2, L in pairs]
    if not pairs:
        raise ValueError("empty sweep")
    L = pairs[0][2]
    for h1, h2, Lk in pairs:
        if Lk != L:
            raise ValueError("all rows of one sweep table must share L")
        ChainParams(h=h1, L=L)
        ChainParams(h=h2, L=L)
    rep = majorana_reps(L)
    rows = []
    for h1, h2, _ in pairs:
        res = xx_fidelity_spectrum(h1, h2, L, rep)
        rows.append([h1, h2, float(L)] + _spectrum_values(res, n_max))
    meta = {"model": "xx", "kind": "pairs", "L": L, "n_max": n_max}
    return Table(columns=["h1", "h2", "L"] + _spectrum_columns(L, n_max), rows=rows, meta=meta)


def xx_susceptibility_sweep(h_grid, delta_h: float, L: int, n_max: int = 5) -> Table:
    """Susceptibility sweep at fixed L over an h grid.

    Each row carries the entanglement spectrum at h (the stencil center),
    its moments and entropies, and the rank-matched second difference
    chi_F with step delta_h.
    """
    h_grid = [float(h) for h in h_grid]
    if not h_grid:
        raise ValueError("empty sweep")
    if delta_h <= 0:
        raise ValueError(f"delta_h must be positive, got {delta_h}")
    for h in h_grid:
        ChainParams(h=h - delta_h, L=L)
        ChainParams(h=h + delta_h, L=L)
    rep = majorana_reps(L)
    rows = []
    for h in h_grid:
        lam_minus = xx_fidelity_spectrum(h, h - delta_h, L, rep).lam
        center = xx_fidelity_spectrum(h, h, L, rep)
        lam_plus = xx_fidelity_spectrum(h, h + delta_h, L, rep).lam
        chi = susceptibility(lam_minus, center.lam, lam_plus, delta_h, h=h)
        rows.append(
            [h, float(L), delta_h]
            + _spectrum_values(center, n_max)
            + [chi.chi_total, chi.chi_abs]
        )
    meta = {"model": "xx", "kind": "susceptibility", "L": L, "delta_h": delta_h, "n_max": n_max}
    return Table(
        columns=["h", "L", "delta_h"] + _spectrum_columns(L, n_max) + ["chi_F", "chi_F_abs"],
        rows=rows,
        meta=meta,
    )


def xx_sweep(spec: XXSweepSpec) -> list[Table]:
    """Run a sweep description; one table per block length."""
    if spec.pairs is not None:
        by_L: dict[int, list[tuple[float, float, int]]] = {}
        for h1, h2, L in spec.pairs:
            by_L.setdefault(int(L), []).append((h1, h2, int(L)))
        return [xx_pair_sweep(by_L[L], spec.n_max) for L in sorted(by_L)]
    if spec.h_grid is None or not spec.L_values:
        raise ValueError("sweep needs either pairs or h_grid with L_values")
    return [
        xx_susceptibility_sweep(spec.h_grid, spec.delta_h, L, spec.n_max)
        for L in spec.L_values
    ]
