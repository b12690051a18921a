"""Classical magnetic impurity in a 2-D s-wave superconductor.

Self-consistent Bogoliubov-de Gennes treatment on an open square lattice
with the impurity exchange -J sigma^z acting at the central site.  The
problem decouples into two Nambu sectors; sector A uses the spinor
(c_{i up}, c^dag_{i dn}) and carries the full dynamics, sector B is its
particle-hole mirror.

The pairing term is written -sum_i Delta_i (c^dag_up c^dag_dn + h.c.) so
that the gap closure Delta_i = v_pair <c_dn c_up> sustains a real
non-negative gap field (the overall sign of Delta is a gauge choice).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kernel import fidelity_op_spectrum_raw, psd_sqrt, sym_eig
from .tables import Table

SC_TOLERANCE = 1e-6
SC_MAX_ITER = 500
SC_MIXING = 0.5
DELTA_INIT = 0.5


@dataclass(frozen=True)
class LatticeParams:
    """Open-boundary square lattice with a centered impurity site."""

    nx: int = 15
    ny: int = 15
    t: float = 1.0
    eps_f: float = -1.0
    v_pair: float = 2.0

    def __post_init__(self) -> None:
        if self.nx < 2 or self.ny < 2:
            raise ValueError(f"lattice must be at least 2x2, got {self.nx}x{self.ny}")
        if self.v_pair <= 0:
            raise ValueError(f"v_pair must be positive, got {self.v_pair}")

    @property
    def n_sites(self) -> int:
        return self.nx * self.ny

    @property
    def impurity_site(self) -> tuple[int, int]:
        return (self.nx // 2, self.ny // 2)

    def site_index(self, ix: int, iy: int) -> int:
        """Sites are numbered sequentially row by row."""
        if not (0 <= ix < self.nx and 0 <= iy < self.ny):
            raise ValueError(f"site ({ix},{iy}) is off the {self.nx}x{self.ny} lattice")
        return iy * self.nx + ix

    def hopping_matrix(self) -> np.ndarray:
        """Single-particle part without the impurity: -t hopping, -eps_f on site."""
        n = self.n_sites
        h0 = np.zeros((n, n))
        np.fill_diagonal(h0, -self.eps_f)
        for iy in range(self.ny):
            for ix in range(self.nx):
                i = self.site_index(ix, iy)
                if ix + 1 < self.nx:
                    j = self.site_index(ix + 1, iy)
                    h0[i, j] = h0[j, i] = -self.t
                if iy + 1 < self.ny:
                    j = self.site_index(ix, iy + 1)
                    h0[i, j] = h0[j, i] = -self.t
        return h0


def build_bdg_hamiltonian(p: LatticeParams, j_coupling: float, delta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """The two decoupled 2N x 2N Nambu sector matrices.

    Sector A acts on (up-particle, dn-hole), sector B on (dn-particle,
    up-hole); their spectra are particle-hole mirrors of each other.
    """
    delta = np.asarray(delta, dtype=float)
    if delta.shape != (p.n_sites,):
        raise ValueError(f"delta must have shape ({p.n_sites},), got {delta.shape}")
    if j_coupling != 0.0 and (p.nx % 2 == 0 or p.ny % 2 == 0):
        raise ValueError(
            f"impurity cannot be centered on an even lattice ({p.nx}x{p.ny}); "
            "use odd extents"
        )
    h0 = p.hopping_matrix()
    lc = p.site_index(*p.impurity_site)
    h_up = h0.copy()
    h_dn = h0.copy()
    h_up[lc, lc] -= j_coupling
    h_dn[lc, lc] += j_coupling
    dhat = np.diag(delta)
    h_a = np.block([[h_up, -dhat], [-dhat, -h_dn]])
    h_b = np.block([[h_dn, dhat], [dhat, -h_up]])
    return h_a, h_b


@dataclass
class BdGSolution:
    """Converged self-consistent solution at one coupling J."""

    params: LatticeParams
    j_coupling: float
    energies_a: np.ndarray
    energies_b: np.ndarray
    amplitudes: np.ndarray  # eigenvector columns of sector A
    delta: np.ndarray
    iterations: int
    residual: float
    nambu_corr: np.ndarray = field(repr=False)  # <Psi^dag_a Psi_b> in sector A


class ConvergenceError(RuntimeError):
    """Gap iteration failed to reach the self-consistency tolerance."""

    def __init__(self, iterations: int, residual: float):
        super().__init__(
            f"gap field not converged after {iterations} iterations "
            f"(last residual {residual:.3e})"
        )
        self.iterations = iterations
        self.residual = residual


def _ground_state_correlations(h_a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Fill all negative-energy quasiparticle levels of sector A.

    Returns the sector spectrum, its eigenvectors, and the correlation
    matrix K = <Psi^dag_a Psi_b> for the Nambu spinor Psi = (c_up, c^dag_dn).
    """
    w, vec = sym_eig(h_a)
    occ = vec[:, w < 0.0]
    return w, vec, occ @ occ.T


def solve_selfconsistent(
    p: LatticeParams,
    j_coupling: float,
    delta0: np.ndarray | None = None,
    mixing: float = SC_MIXING,
    tol: float = SC_TOLERANCE,
    max_iter: int = SC_MAX_ITER,
) -> BdGSolution:
    """Iterate Delta_i = v_pair <c_dn c_up> to its zero-temperature fixed point.

    Linear mixing, tolerance on max_i |Delta_out - Delta_in| in units of t.
    ``delta0`` warm-starts the iteration (scans chain solutions for speed).
    """
    n = p.n_sites
    delta = np.full(n, DELTA_INIT * p.t) if delta0 is None else np.asarray(delta0, dtype=float).copy()
    residual = np.inf
    for it in range(1, max_iter + 1):
        h_a, _ = build_bdg_hamiltonian(p, j_coupling, delta)
        w, vec, corr = _ground_state_correlations(h_a)
        delta_out = p.v_pair * np.diag(corr[n:, :n]).copy()
        residual = float(np.max(np.abs(delta_out - delta)))
        if residual <= tol * p.t:
            delta = delta_out
            break
        delta = mixing * delta_out + (1.0 - mixing) * delta
    else:
        raise ConvergenceError(max_iter, residual)

    h_a, h_b = build_bdg_hamiltonian(p, j_coupling, delta)
    w, vec, corr = _ground_state_correlations(h_a)
    return BdGSolution(
        params=p,
        j_coupling=j_coupling,
        energies_a=w,
        energies_b=np.linalg.eigvalsh(h_b),
        amplitudes=vec,
        delta=delta,
        iterations=it,
        residual=residual,
        nambu_corr=corr,
    )


def solve_fixed_delta(p: LatticeParams, j_coupling: float, delta: np.ndarray) -> BdGSolution:
    """One-shot solution with a frozen gap field (no self-consistency)."""
    delta = np.asarray(delta, dtype=float)
    h_a, h_b = build_bdg_hamiltonian(p, j_coupling, delta)
    w, vec, corr = _ground_state_correlations(h_a)
    return BdGSolution(
        params=p,
        j_coupling=j_coupling,
        energies_a=w,
        energies_b=np.linalg.eigvalsh(h_b),
        amplitudes=vec,
        delta=delta,
        iterations=0,
        residual=0.0,
        nambu_corr=corr,
    )


@dataclass(frozen=True)
class SiteState:
    """One-site reduced density matrix in the basis {empty, doubly, up, dn}."""

    site: tuple[int, int]
    n_up: float
    n_dn: float
    n_updn: float
    pair: float  # <c^dag_up c^dag_dn>, real in the chosen gauge
    rho: np.ndarray


def one_site_rho(sol: BdGSolution, site: tuple[int, int]) -> SiteState:
    """Assemble the 4x4 one-site state from the converged correlators.

    The double occupancy uses the Gaussian (Wick) decomposition
    <n_up n_dn> = <n_up><n_dn> + <c^dag_up c^dag_dn><c_dn c_up>, exact for
    the collinear BdG ground state.
    """
    p = sol.params
    i = p.site_index(*site)
    n = p.n_sites
    corr = sol.nambu_corr
    n_up = float(corr[i, i])
    n_dn = 1.0 - float(corr[n + i, n + i])
    pair = float(corr[i, n + i])
    n_updn = n_up * n_dn + pair * pair
    rho = np.zeros((4, 4))
    rho[0, 0] = 1.0 - n_up - n_dn + n_updn
    rho[0, 1] = rho[1, 0] = pair
    rho[1, 1] = n_updn
    rho[2, 2] = n_up - n_updn
    rho[3, 3] = n_dn - n_updn
    return SiteState(site=tuple(site), n_up=n_up, n_dn=n_dn, n_updn=n_updn, pair=pair, rho=rho)


@dataclass(frozen=True)
class SiteFidelity:
    """Blockwise fidelity-operator spectrum of two one-site states.

    Charge eigenvalues are reported descending and also labeled by the
    dominant basis component (empty vs doubly occupied) of their
    eigenvectors; spin eigenvalues are labeled directly since the spin
    block is diagonal.
    """

    lambda_charge: tuple[float, float]
    lambda_charge_empty: float
    lambda_charge_doubly: float
    lambda_spin_up: float
    lambda_spin_dn: float

    @property
    def fidelity(self) -> float:
        return sum(self.lambda_charge) + self.lambda_spin_up + self.lambda_spin_dn

    @property
    def lambdas(self) -> np.ndarray:
        return np.array(list(self.lambda_charge) + [self.lambda_spin_up, self.lambda_spin_dn])


def site_fidelity_spectrum(s1: SiteState, s2: SiteState) -> SiteFidelity:
    """Fidelity operator of two one-site states, computed per block."""
    a = psd_sqrt(s2.rho[:2, :2]) @ psd_sqrt(s1.rho[:2, :2])
    _, lam_charge, vh = np.linalg.svd(a)
    # right singular vectors are the fidelity-operator eigenvectors;
    # component 0 -> empty, 1 -> doubly occupied
    if abs(vh[0, 1]) >= abs(vh[0, 0]):
        doubly, empty = lam_charge[0], lam_charge[1]
    else:
        doubly, empty = lam_charge[1], lam_charge[0]
    lam_up = float(np.sqrt(max(s1.rho[2, 2] * s2.rho[2, 2], 0.0)))
    lam_dn = float(np.sqrt(max(s1.rho[3, 3] * s2.rho[3, 3], 0.0)))
    return SiteFidelity(
        lambda_charge=(float(lam_charge[0]), float(lam_charge[1])),
        lambda_charge_empty=float(empty),
        lambda_charge_doubly=float(doubly),
        lambda_spin_up=lam_up,
        lambda_spin_dn=lam_dn,
    )


def site_fidelity_dense(s1: SiteState, s2: SiteState) -> np.ndarray:
    """Full 4x4 fidelity spectrum with no block shortcut (cross-check path)."""
    return fidelity_op_spectrum_raw(s1.rho, s2.rho)


def resolve_site(p: LatticeParams, site) -> tuple[int, int]:
    """Accept 'impurity', 'bulk' (far corner) or explicit (ix, iy)."""
    if isinstance(site, str):
        if site == "impurity":
            return p.impurity_site
        if site == "bulk":
            return (0, 0)
        raise ValueError(f"unknown site label {site!r}")
    ix, iy = int(site[0]), int(site[1])
    p.site_index(ix, iy)
    return (ix, iy)


JSCAN_COLUMNS = ["J", "lambda_charge_1", "lambda_charge_2", "lambda_spin_up", "lambda_spin_dn", "fidelity"]


def solve_scan(p: LatticeParams, j_values, cold_check_points: int = 2) -> tuple[list[BdGSolution], dict]:
    """Self-consistent solutions along an ascending J scan with warm starts.

    Two interior grid points are re-solved from a cold start and the gap
    deviation is recorded as a diagnostic.
    """
    j_values = sorted(float(j) for j in j_values)
    solutions: list[BdGSolution] = []
    delta_prev: np.ndarray | None = None
    for j in j_values:
        sol = solve_selfconsistent(p, j, delta0=delta_prev)
        solutions.append(sol)
        delta_prev = sol.delta
    meta: dict = {"iterations": [s.iterations for s in solutions]}
    if len(solutions) >= 3 and cold_check_points > 0:
        checks = {}
        picks = np.linspace(0, len(solutions) - 1, cold_check_points + 2)[1:-1]
        for idx in sorted({int(round(q)) for q in picks}):
            cold = solve_selfconsistent(p, solutions[idx].j_coupling)
            checks[f"{solutions[idx].j_coupling:.6g}"] = float(
                np.max(np.abs(cold.delta - solutions[idx].delta))
            )
        meta["cold_start_max_gap_dev"] = checks
    return solutions, meta


def impurity_jscan(p: LatticeParams, j_values, delta_j: float = 0.05, sites=("impurity",)) -> dict[tuple[int, int], Table]:
    """Fidelity-operator spectrum against J at fixed probe sites.

    For every J in the grid, rho_1 is the one-site state at J and rho_2 the
    state at J + delta_j, both at the same site.  Returns one table per
    probe site; all sites share the same chain of solutions.
    """
    if delta_j <= 0:
        raise ValueError(f"delta_j must be positive, got {delta_j}")
    j_values = [float(j) for j in j_values]
    if not j_values:
        raise ValueError("empty J grid")
    coords = [resolve_site(p, s) for s in sites]
    needed = sorted({round(j, 12) for j in j_values} | {round(j + delta_j, 12) for j in j_values})
    solutions, scan_meta = solve_scan(p, needed)
    by_j = {round(s.j_coupling, 12): s for s in solutions}
    tables: dict[tuple[int, int], Table] = {}
    for coord in coords:
        rows = []
        for j in j_values:
            s1 = one_site_rho(by_j[round(j, 12)], coord)
            s2 = one_site_rho(by_j[round(j + delta_j, 12)], coord)
            fid = site_fidelity_spectrum(s1, s2)
            rows.append(
                [j, fid.lambda_charge[0], fid.lambda_charge[1], fid.lambda_spin_up, fid.lambda_spin_dn, fid.fidelity]
            )
        meta = dict(scan_meta)
        meta.update(
            {
                "model": "impurity",
                "kind": "j_scan",
                "site": list(coord),
                "delta_J": delta_j,
                "gap_field": "self-consistent per J",
            }
        )
        tables[coord] = Table(columns=list(JSCAN_COLUMNS), rows=rows, meta=meta)
    return tables


@dataclass(frozen=True)
class JumpEvent:
    """One discontinuity of a J scan.

    ``start``/``end`` index the rows bracketing the event (the row whose
    state pair straddles the crossing is folded into the event), and
    ``amplitude`` is the largest net eigenvalue change across it.
    """

    start: int
    end: int
    amplitude: float

    @property
    def j_window(self) -> tuple[int, int]:
        return (self.start, self.end)


def detect_jump_events(values: np.ndarray, ratio: float = 10.0) -> list[JumpEvent]:
    """Locate discontinuities in a family of curves sampled on a grid.

    ``values`` has one row per grid point and one column per curve.  A step
    well above the median step is a candidate; consecutive candidates merge
    into a single event (a fidelity pair straddling the crossing elevates
    two adjacent steps).  An event is kept when its net amplitude exceeds
    ``ratio`` times the median step.
    """
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    steps = np.max(np.abs(np.diff(values, axis=0)), axis=1)
    if steps.size == 0:
        return []
    background = float(np.median(steps))
    floor = max(background, 1e-12)
    flagged = [k for k in range(len(steps)) if steps[k] > 5.0 * floor]
    events: list[list[int]] = []
    for k in flagged:
        if events and k == events[-1][-1] + 1:
            events[-1].append(k)
        else:
            events.append([k])
    out = []
    for ev in events:
        start, end = ev[0], ev[-1] + 1
        amplitude = float(np.max(np.abs(values[end] - values[start])))
        if amplitude > ratio * floor:
            out.append(JumpEvent(start=start, end=end, amplitude=amplitude))
    return out


MAP_COLUMNS = [
    "i2_x", "i2_y", "site_index",
    "lambda_charge_1", "lambda_charge_2", "lambda_spin_up", "lambda_spin_dn", "fidelity",
]


def impurity_spatial_map(p: LatticeParams, j_coupling: float, anchor="impurity") -> Table:
    """Fidelity spectrum between an anchor site and every lattice site.

    Both states come from the same converged solution at J; rows run
    sequentially row by row over the lattice.
    """
    sol = solve_selfconsistent(p, j_coupling)
    a = resolve_site(p, anchor)
    s1 = one_site_rho(sol, a)
    rows = []
    for iy in range(p.ny):
        for ix in range(p.nx):
            s2 = one_site_rho(sol, (ix, iy))
            fid = site_fidelity_spectrum(s1, s2)
            rows.append(
                [
                    float(ix), float(iy), float(p.site_index(ix, iy)),
                    fid.lambda_charge[0], fid.lambda_charge[1],
                    fid.lambda_spin_up, fid.lambda_spin_dn, fid.fidelity,
                ]
            )
    meta = {
        "model": "impurity",
        "kind": "spatial_map",
        "J": j_coupling,
        "anchor": list(a),
        "iterations": sol.iterations,
        "gap_field": "self-consistent per J",
    }
    return Table(columns=list(MAP_COLUMNS), rows=rows, meta=meta)
