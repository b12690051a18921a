import numpy as np
import pytest

from fidspec.kernel import (
    CanonicalModes,
    ContractViolation,
    antisym_canonical,
    check_density_matrix,
    fidelity_op_spectrum,
    psd_sqrt,
    sym_eig,
)

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def random_density_matrix(rng, dim):
    a = rng.normal(size=(dim, dim))
    rho = a @ a.T
    return rho / np.trace(rho)


def random_antisymmetric(rng, dim):
    a = rng.normal(size=(dim, dim))
    return a - a.T


class TestSymEig:
    def test_identity(self):
        w, v = sym_eig(np.eye(3))
        assert np.allclose(w, [1.0, 1.0, 1.0], atol=1e-14)

    def test_pauli_x(self):
        w, _ = sym_eig(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(w, [-1.0, 1.0], atol=1e-14)

    def test_xx_correlation_2x2(self):
        # G_2 at h = 0.5: closed form e = g0 +- g1 with g0 = -1/3, g1 = sqrt(3)/pi
        g0, g1 = -1.0 / 3.0, np.sqrt(3.0) / np.pi
        w, _ = sym_eig(np.array([[g0, g1], [g1, g0]]))
        assert np.allclose(w, [g0 - g1, g0 + g1], atol=1e-14)
        assert np.allclose(w, [-0.88466, 0.21800], atol=5e-6)

    def test_residual_and_ordering(self):
        rng = np.random.default_rng(11)
        a = rng.normal(size=(12, 12))
        a = a + a.T
        w, v = sym_eig(a)
        assert np.all(np.diff(w) >= 0)
        norm = np.linalg.norm(a, 2)
        for i in range(12):
            assert np.linalg.norm(a @ v[:, i] - w[i] * v[:, i]) <= 1e-10 * norm

    def test_complex_hermitian(self):
        h = np.array([[1.0, 1j], [-1j, -1.0]])
        w, v = sym_eig(h)
        assert np.allclose(w, [-np.sqrt(2), np.sqrt(2)], atol=1e-14)

    def test_rejects_asymmetric_naming_pair(self):
        a = np.array([[0.0, 1.0], [0.5, 0.0]])
        with pytest.raises(ContractViolation, match=r"\(0,1\)|\(1,0\)"):
            sym_eig(a)

    def test_rejects_non_square(self):
        with pytest.raises(ContractViolation, match="square"):
            sym_eig(np.zeros((2, 3)))


class TestPsdSqrt:
    def test_diagonal(self):
        assert np.allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-14)

    def test_identity(self):
        assert np.allclose(psd_sqrt(np.eye(4)), np.eye(4), atol=1e-14)

    def test_reconstruction_random_psd(self):
        rng = np.random.default_rng(3)
        r = rng.normal(size=(6, 6))
        m = r.T @ r
        b = psd_sqrt(m)
        assert np.max(np.abs(b @ b - m)) <= 1e-9 * np.linalg.norm(m, 2)

    def test_projector_idempotence(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            q, _ = np.linalg.qr(rng.normal(size=(7, 7)))
            p = q[:, :3] @ q[:, :3].T
            assert np.max(np.abs(psd_sqrt(p) - p)) <= 1e-10

    def test_clamps_roundoff_negatives(self):
        m = np.diag([1.0, -1e-14])
        b = psd_sqrt(m)
        assert b[1, 1] == 0.0

    def test_rejects_indefinite(self):
        with pytest.raises(ContractViolation, match="-1"):
            psd_sqrt(np.diag([1.0, -1.0]))


class TestAntisymCanonical:
    def assert_canonical(self, b, modes):
        dim = b.shape[0]
        assert len(modes.nu) == dim // 2
        assert np.all(modes.nu >= -1e-12)
        assert np.all(np.diff(modes.nu) <= 1e-12)  # descending
        assert np.max(np.abs(modes.V @ modes.V.T - np.eye(dim))) <= 1e-10
        recon = modes.V @ b @ modes.V.T
        assert np.max(np.abs(recon - modes.canonical_matrix())) <= 1e-10

    def test_already_canonical(self):
        b = J2 / 3.0
        modes = antisym_canonical(b)
        assert np.allclose(modes.nu, [1.0 / 3.0], atol=1e-14)
        self.assert_canonical(b, modes)

    def test_block_diagonal(self):
        b = np.zeros((4, 4))
        b[:2, :2] = 0.9 * J2
        b[2:, 2:] = 0.2 * J2
        modes = antisym_canonical(b)
        assert np.allclose(modes.nu, [0.9, 0.2], atol=1e-14)
        self.assert_canonical(b, modes)
        # V is a signed permutation for an already block-diagonal input
        assert np.allclose(np.abs(modes.V) @ np.abs(modes.V.T), np.eye(4), atol=1e-12)

    def test_xx_block_matches_singular_values(self):
        # nu_l are the distinct singular values of B, each doubly degenerate
        from fidspec.xx_chain import ChainParams, correlation_matrix

        tc = correlation_matrix(ChainParams(h=0.5, L=3))
        modes = antisym_canonical(tc.B)
        sv = np.linalg.svd(tc.B, compute_uv=False)
        assert np.allclose(np.repeat(modes.nu, 2), sv, atol=1e-10)
        self.assert_canonical(tc.B, modes)

    def test_zero_matrix(self):
        modes = antisym_canonical(np.zeros((4, 4)))
        assert np.allclose(modes.nu, [0.0, 0.0])
        self.assert_canonical(np.zeros((4, 4)), modes)

    def test_singular_with_mixed_modes(self):
        rng = np.random.default_rng(17)
        q, _ = np.linalg.qr(rng.normal(size=(6, 6)))
        target = np.zeros((6, 6))
        target[:2, :2] = 0.7 * J2  # two exact zero modes
        b = q @ target @ q.T
        b = (b - b.T) / 2
        modes = antisym_canonical(b)
        assert np.allclose(modes.nu, [0.7, 0.0, 0.0], atol=1e-10)
        self.assert_canonical(b, modes)

    def test_round_trip_1000_random(self):
        rng = np.random.default_rng(23)
        for _ in range(1000):
            dim = 2 * int(rng.integers(1, 7))  # dims 2..12
            b = random_antisymmetric(rng, dim)
            self.assert_canonical(b, antisym_canonical(b))

    def test_rejects_odd_dimension(self):
        with pytest.raises(ContractViolation, match="even"):
            antisym_canonical(np.zeros((3, 3)))

    def test_rejects_non_antisymmetric(self):
        with pytest.raises(ContractViolation, match="antisymmetric"):
            antisym_canonical(np.eye(2))


class TestFidelityOpSpectrum:
    def test_equal_states_give_entanglement_spectrum(self):
        rho = np.diag([0.7, 0.3])
        lam = fidelity_op_spectrum(rho, rho)
        assert np.allclose(lam, [0.7, 0.3], atol=1e-12)

    def test_pure_states_overlap(self):
        rng = np.random.default_rng(2)
        psi1 = rng.normal(size=5) + 1j * rng.normal(size=5)
        psi2 = rng.normal(size=5) + 1j * rng.normal(size=5)
        psi1 /= np.linalg.norm(psi1)
        psi2 /= np.linalg.norm(psi2)
        rho1 = np.outer(psi1, psi1.conj())
        rho2 = np.outer(psi2, psi2.conj())
        lam = fidelity_op_spectrum(rho1, rho2)
        assert abs(lam[0] - abs(np.vdot(psi1, psi2))) <= 1e-10
        assert np.max(np.abs(lam[1:])) <= 1e-8

    def test_commuting_diagonal_case(self):
        lam = fidelity_op_spectrum(np.diag([0.5, 0.5]), np.diag([2 / 3, 1 / 3]))
        assert np.allclose(lam, [np.sqrt(1 / 3), np.sqrt(1 / 6)], atol=1e-12)
        assert np.allclose(lam, [0.57735, 0.40825], atol=5e-6)

    def test_dimension_mismatch(self):
        with pytest.raises(ContractViolation, match="mismatch"):
            fidelity_op_spectrum(np.eye(2) / 2, np.eye(3) / 3)

    def test_invalid_state_propagates(self):
        with pytest.raises(ContractViolation, match="trace"):
            fidelity_op_spectrum(np.eye(2), np.eye(2) / 2)

    def test_symmetry_in_arguments(self):
        rng = np.random.default_rng(9)
        for _ in range(25):
            r1 = random_density_matrix(rng, 5)
            r2 = random_density_matrix(rng, 5)
            l12 = fidelity_op_spectrum(r1, r2)
            l21 = fidelity_op_spectrum(r2, r1)
            assert np.max(np.abs(l12 - l21)) <= 1e-8

    def test_product_eigenvalue_fast_path(self):
        # multiset of lambda^2 equals the spectrum of rho1 @ rho2 for rho1 > 0
        rng = np.random.default_rng(13)
        for _ in range(25):
            r1 = random_density_matrix(rng, 6) + 1e-3 * np.eye(6)
            r1 /= np.trace(r1)
            r2 = random_density_matrix(rng, 6)
            lam = fidelity_op_spectrum(r1, r2)
            prod = np.sort(np.linalg.eigvals(r1 @ r2).real)[::-1]
            assert np.max(np.abs(lam**2 - prod)) <= 1e-9

    def test_self_fidelity_sums_to_one(self):
        rng = np.random.default_rng(21)
        for dim in (2, 4, 8):
            for _ in range(10):
                rho = random_density_matrix(rng, dim)
                assert abs(np.sum(fidelity_op_spectrum(rho, rho)) - 1.0) <= 1e-10


class TestDensityValidation:
    def test_accepts_valid(self):
        check_density_matrix(np.eye(3) / 3)

    def test_rejects_negative_eigenvalue(self):
        bad = np.diag([1.2, -0.2])
        with pytest.raises(ContractViolation, match="PSD"):
            check_density_matrix(bad)
