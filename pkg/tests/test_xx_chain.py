import numpy as np
import pytest

from fidspec.kernel import ContractViolation, antisym_canonical
from fidspec.xx_chain import (
    BlockState,
    ChainParams,
    block_density_matrix,
    correlation_matrix,
    majorana_reps,
    mode_entropy,
    mode_spectrum,
    rho_from_majorana_correlations,
    rho_from_modes,
    xx_fidelity_spectrum,
    xx_pair_sweep,
    xx_susceptibility_sweep,
)
from fidspec.spectrum import entropies

from oracles import (
    majorana_correlation_matrix,
    partial_trace_first,
    xx_chain_ground_state,
)


class TestChainParams:
    def test_rejects_critical_field(self):
        with pytest.raises(ValueError, match="h must"):
            ChainParams(h=1.0, L=2)

    def test_rejects_large_block(self):
        with pytest.raises(ValueError, match="L must"):
            ChainParams(h=0.5, L=9)


class TestCorrelationMatrix:
    def test_symmetric_point(self):
        tc = correlation_matrix(ChainParams(h=0.0, L=3))
        assert abs(tc.g[0]) <= 1e-15
        assert abs(tc.g[1] - 2.0 / np.pi) <= 1e-15
        assert abs(tc.g[2]) <= 1e-15

    def test_half_field_exact(self):
        tc = correlation_matrix(ChainParams(h=0.5, L=3))
        assert abs(tc.g[0] + 1.0 / 3.0) <= 1e-15
        assert abs(tc.g[1] - np.sqrt(3.0) / np.pi) <= 1e-15
        assert abs(tc.g[2] - np.sqrt(3.0) / (2.0 * np.pi)) <= 1e-15

    def test_polarized_limit(self):
        tc = correlation_matrix(ChainParams(h=1.0 - 1e-12, L=4))
        assert abs(tc.g[0] + 1.0) <= 1e-5
        assert np.max(np.abs(tc.g[1:])) <= 1e-5

    def test_structure(self):
        tc = correlation_matrix(ChainParams(h=0.3, L=5))
        assert np.max(np.abs(tc.g)) <= 1.0
        assert np.allclose(tc.G, tc.G.T)
        for i in range(5):
            for j in range(5):
                assert tc.G[i, j] == tc.g[abs(i - j)]
        assert np.max(np.abs(tc.B + tc.B.T)) == 0.0


class TestMajoranaReps:
    def test_single_site(self):
        rep = majorana_reps(1)
        assert np.array_equal(rep.C[0], np.array([[0, 1], [1, 0]], dtype=complex))
        assert np.array_equal(rep.C[1], np.array([[0, -1j], [1j, 0]], dtype=complex))

    def test_string_on_second_site(self):
        rep = majorana_reps(2)
        sz = np.diag([1.0, -1.0]).astype(complex)
        sx = np.array([[0, 1], [1, 0]], dtype=complex)
        assert np.array_equal(rep.C[2], np.kron(sz, sx))

    @pytest.mark.parametrize("L", [1, 2, 3, 4])
    def test_clifford_algebra_exact(self, L):
        rep = majorana_reps(L)
        eye2 = 2.0 * np.eye(2**L, dtype=complex)
        for m in range(2 * L):
            for n in range(m, 2 * L):
                anti = rep.C[m] @ rep.C[n] + rep.C[n] @ rep.C[m]
                target = eye2 if m == n else np.zeros_like(anti)
                assert np.array_equal(anti, target)

    def test_memory_guard(self):
        with pytest.raises(ValueError, match="memory guard"):
            majorana_reps(9)


class TestBlockDensityMatrix:
    def test_single_site_half_field(self):
        bs = block_density_matrix(correlation_matrix(ChainParams(h=0.5, L=1)), majorana_reps(1))
        assert np.allclose(np.sort(np.linalg.eigvalsh(bs.rho)), [1 / 3, 2 / 3], atol=1e-12)

    def test_single_site_zero_field_is_maximally_mixed(self):
        bs = block_density_matrix(correlation_matrix(ChainParams(h=0.0, L=1)), majorana_reps(1))
        assert np.allclose(bs.rho, np.eye(2) / 2, atol=1e-12)

    @pytest.mark.parametrize("h", [0.0, 0.25, 0.5, 0.75, 0.95])
    @pytest.mark.parametrize("L", [1, 2, 3, 4, 5, 6])
    def test_spectrum_factorization(self, h, L):
        bs = block_density_matrix(correlation_matrix(ChainParams(h=h, L=L)), majorana_reps(L))
        ev = np.sort(np.linalg.eigvalsh(bs.rho))[::-1]
        assert np.max(np.abs(ev - mode_spectrum(bs.modes))) <= 1e-10

    def test_state_is_valid_density_matrix(self):
        bs = block_density_matrix(correlation_matrix(ChainParams(h=0.7, L=4)), majorana_reps(4))
        assert abs(np.trace(bs.rho).real - 1.0) <= 1e-12
        assert np.min(np.linalg.eigvalsh(bs.rho)) >= -1e-10

    def test_mismatched_sizes(self):
        with pytest.raises(ContractViolation, match="L"):
            block_density_matrix(correlation_matrix(ChainParams(h=0.5, L=2)), majorana_reps(3))

    def test_finite_chain_ed_oracle(self):
        # 12-site open chain, 3-site block: rebuilding the state from the
        # chain's own measured Majorana correlations must reproduce the
        # brute-force partial trace of the exact ground state.
        n_sites, block = 12, 3
        h = 0.5
        psi = xx_chain_ground_state(n_sites, h)
        rho_exact = partial_trace_first(psi, block, n_sites)
        b_oracle = majorana_correlation_matrix(psi, block, n_sites)
        bs = rho_from_majorana_correlations(b_oracle, majorana_reps(block))
        assert np.max(np.abs(bs.rho - rho_exact)) <= 1e-8


class TestModeSpectrum:
    def test_pure_mode(self):
        assert np.allclose(mode_spectrum(np.array([1.0])), [1.0, 0.0])

    def test_single_third(self):
        assert np.allclose(mode_spectrum(np.array([1 / 3])), [2 / 3, 1 / 3], atol=1e-15)

    def test_two_modes(self):
        spec = mode_spectrum(np.array([0.9, 0.2]))
        assert np.allclose(spec, [0.57, 0.38, 0.03, 0.02], atol=1e-15)

    def test_entropy_fast_path(self):
        for h in (0.0, 0.3, 0.8):
            for L in (1, 3, 5):
                modes = antisym_canonical(correlation_matrix(ChainParams(h=h, L=L)).B)
                s_full = entropies(mode_spectrum(modes), 2).von_neumann
                assert abs(s_full - mode_entropy(modes.nu)) <= 1e-10


class TestXXFidelitySpectrum:
    def test_equal_fields_reduce_to_entanglement(self):
        res = xx_fidelity_spectrum(0.5, 0.5, 1)
        assert np.allclose(res.lam, [2 / 3, 1 / 3], atol=1e-10)

    def test_equal_fields_match_mode_spectrum(self):
        for h in (0.2, 0.6, 0.9):
            for L in (2, 4):
                res = xx_fidelity_spectrum(h, h, L)
                modes = antisym_canonical(correlation_matrix(ChainParams(h=h, L=L)).B)
                assert np.max(np.abs(res.lam - mode_spectrum(modes))) <= 1e-10

    def test_commuting_single_mode_oracle(self):
        res = xx_fidelity_spectrum(0.0, 0.5, 1)
        expected = sorted([np.sqrt(0.5 * 2 / 3), np.sqrt(0.5 * 1 / 3)], reverse=True)
        assert np.allclose(res.lam, expected, atol=1e-12)
        assert abs(res.fidelity - 0.98560) <= 5e-6

    def test_dual_route_against_product_eigenvalues(self):
        # independent path: lambda^2 are the eigenvalues of rho1 @ rho2
        rep = majorana_reps(3)
        rho1 = block_density_matrix(correlation_matrix(ChainParams(h=0.5, L=3)), rep).rho
        rho2 = block_density_matrix(correlation_matrix(ChainParams(h=0.9, L=3)), rep).rho
        res = xx_fidelity_spectrum(0.5, 0.9, 3)
        assert len(res.lam) == 8
        prod = np.sort(np.linalg.eigvals(rho1 @ rho2).real)[::-1]
        assert np.max(np.abs(res.lam**2 - np.clip(prod, 0, None))) <= 1e-9

    def test_gauge_independence_of_modes(self):
        # rotating inside a canonical block and permuting equal-nu blocks
        # leaves the assembled state invariant
        rep = majorana_reps(3)
        tc = correlation_matrix(ChainParams(h=0.4, L=3))
        modes = antisym_canonical(tc.B)
        rho_ref = rho_from_modes(modes, rep)

        rng = np.random.default_rng(42)
        theta = rng.uniform(0, 2 * np.pi, size=3)
        gauge = np.zeros((6, 6))
        for l in range(3):
            c, s = np.cos(theta[l]), np.sin(theta[l])
            gauge[2 * l : 2 * l + 2, 2 * l : 2 * l + 2] = [[c, s], [-s, c]]
        from fidspec.kernel import CanonicalModes

        rotated = CanonicalModes(nu=modes.nu, V=gauge @ modes.V)
        assert np.max(np.abs(rotated.V @ tc.B @ rotated.V.T - modes.canonical_matrix())) <= 1e-10
        rho_rot = rho_from_modes(rotated, rep)
        assert np.max(np.abs(rho_rot - rho_ref)) <= 1e-9

    def test_entanglement_limit_continuity(self):
        h, L = 0.6, 3
        base = xx_fidelity_spectrum(h, h, L).lam
        devs = []
        for d in (1e-2, 1e-3, 1e-4):
            lam = xx_fidelity_spectrum(h, h + d, L).lam
            devs.append(np.max(np.abs(lam - base)))
        assert devs[0] > devs[1] > devs[2]


class TestSweeps:
    def test_pair_sweep_shapes_and_self_row(self):
        table = xx_pair_sweep([(0.5, h2, 2) for h2 in (0.5, 0.6, 0.7)])
        assert table.n_rows == 3
        assert len(table.columns) == 3 + 4 + 4 + 5 + 5
        m1 = table.rows[0][table.columns.index("M_1")]
        assert abs(m1 - 1.0) <= 1e-10  # self-fidelity row

    def test_pair_sweep_rejects_mixed_L(self):
        with pytest.raises(ValueError, match="share L"):
            xx_pair_sweep([(0.5, 0.5, 2), (0.5, 0.5, 3)])

    def test_pair_sweep_rejects_out_of_range_before_work(self):
        with pytest.raises(ValueError):
            xx_pair_sweep([(0.5, 1.2, 2)])

    def test_susceptibility_sweep(self):
        table = xx_susceptibility_sweep([0.3, 0.5], 0.01, 1)
        assert table.n_rows == 2
        chi = table.column("chi_F")
        chi_abs = table.column("chi_F_abs")
        assert all(abs(c) == a for c, a in zip(chi, chi_abs))
        # single mode closed form: chi = -nu'(h)^2 / (16 p1 p2)
        h = 0.5
        nu = 1 - 2 * np.arccos(h) / np.pi
        nup = (2 / np.pi) / np.sqrt(1 - h * h)
        p1, p2 = (1 + nu) / 2, (1 - nu) / 2
        chi_exact = -(nup**2) / (16 * p1 * p2)
        assert abs(chi[1] - chi_exact) <= 1e-4

    def test_susceptibility_rejects_grid_leaving_domain(self):
        with pytest.raises(ValueError):
            xx_susceptibility_sweep([0.995], 0.01, 2)

    def test_entropy_decrease_toward_critical_point(self):
        table = xx_pair_sweep([(0.6, 0.6, 6), (0.99, 0.99, 6)])
        for n in range(2, 6):
            col = table.columns.index(f"S_{n}")
            assert table.rows[1][col] < table.rows[0][col]
