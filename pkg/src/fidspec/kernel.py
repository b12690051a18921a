"""Dense spectral primitives shared by every model module.

Provides symmetric/Hermitian eigendecomposition, the positive-semidefinite
matrix square root, reduction of a real antisymmetric matrix to its canonical
2x2 block form, and the spectrum of the fidelity operator

    sqrt( sqrt(rho1) rho2 sqrt(rho1) )

whose trace is the Uhlmann fidelity between two density matrices.

All functions are pure and operate on plain ``numpy`` arrays.  Matrix sizes
here are a few hundred at most, so everything is dense.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SYMMETRY_RTOL = 1e-12
PSD_CLAMP_RTOL = 1e-10
DENSITY_TRACE_ATOL = 1e-12


class ContractViolation(ValueError):
    """An input failed one of the documented matrix contracts."""


def _as_square(a: np.ndarray, name: str) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolation(f"{name} must be square, got shape {a.shape}")
    return a


def check_symmetric(a: np.ndarray, rtol: float = SYMMETRY_RTOL, name: str = "matrix") -> np.ndarray:
    """Validate Hermiticity of ``a`` and return it as an array.

    The tolerance is relative to max|a|.  On failure the error names the
    worst offending entry pair.
    """
    a = _as_square(a, name)
    scale = max(float(np.max(np.abs(a))), 1.0) if a.size else 1.0
    dev = np.abs(a - a.conj().T)
    worst = float(np.max(dev)) if dev.size else 0.0
    if worst > rtol * scale:
        i, j = np.unravel_index(int(np.argmax(dev)), dev.shape)
        raise ContractViolation(
            f"{name} is not Hermitian: entries ({i},{j})={a[i, j]!r} and "
            f"({j},{i})={a[j, i]!r} differ by {worst:.3e} (tol {rtol * scale:.3e})"
        )
    return a


def check_antisymmetric(b: np.ndarray, rtol: float = SYMMETRY_RTOL, name: str = "matrix") -> np.ndarray:
    """Validate that ``b`` is real antisymmetric with even dimension."""
    b = _as_square(b, name)
    if np.iscomplexobj(b):
        if np.max(np.abs(b.imag)) > rtol * max(float(np.max(np.abs(b))), 1.0):
            raise ContractViolation(f"{name} must be real for the canonical form")
        b = b.real
    if b.shape[0] % 2 != 0:
        raise ContractViolation(f"{name} must have even dimension, got {b.shape[0]}")
    scale = max(float(np.max(np.abs(b))), 1.0) if b.size else 1.0
    dev = np.abs(b + b.T)
    worst = float(np.max(dev)) if dev.size else 0.0
    if worst > rtol * scale:
        i, j = np.unravel_index(int(np.argmax(dev)), dev.shape)
        raise ContractViolation(
            f"{name} is not antisymmetric: entries ({i},{j})={b[i, j]!r} and "
            f"({j},{i})={b[j, i]!r} violate B[i,j] = -B[j,i] by {worst:.3e}"
        )
    return b


def check_density_matrix(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity (up to round-off)."""
    rho = check_symmetric(rho, name=name)
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > DENSITY_TRACE_ATOL:
        raise ContractViolation(f"{name} has trace {tr!r}, expected 1 within {DENSITY_TRACE_ATOL}")
    w = np.linalg.eigvalsh(rho)
    if w[0] < -1e-10:
        raise ContractViolation(f"{name} is not PSD: lowest eigenvalue {w[0]:.3e}")
    return rho


def sym_eig(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric / Hermitian matrix.

    Returns ``(w, v)`` with eigenvalues ``w`` ascending and orthonormal
    eigenvector columns ``v``.  Input symmetry is enforced; the decomposition
    itself is delegated to LAPACK's orthogonal-similarity solver.
    """
    a = check_symmetric(a, name="sym_eig input")
    w, v = np.linalg.eigh(a)
    return w, v


def psd_sqrt(a: np.ndarray, clamp_tol: float | None = None) -> np.ndarray:
    """Square root of a positive-semidefinite symmetric matrix.

    Eigenvalues in ``[-clamp_tol, 0)`` are treated as round-off and clamped
    to zero before taking the root; anything below ``-clamp_tol`` raises.
    ``clamp_tol`` defaults to ``1e-10 * ||a||``.
    """
    w, v = sym_eig(a)
    scale = max(float(np.max(np.abs(w))), 0.0) if w.size else 0.0
    if clamp_tol is None:
        clamp_tol = PSD_CLAMP_RTOL * max(scale, 1e-30)
    if w.size and w[0] < -clamp_tol:
        raise ContractViolation(
            f"matrix is not PSD: most negative eigenvalue {w[0]:.6e} "
            f"below clamp tolerance -{clamp_tol:.3e}"
        )
    # Round-off eigenvalues on either side of zero are flattened; the square
    # root would otherwise amplify +1e-16 noise to 1e-8 in the result.
    w = np.where(w < clamp_tol, 0.0, w)
    root = (v * np.sqrt(w)) @ v.conj().T
    return (root + root.conj().T) / 2


@dataclass(frozen=True)
class CanonicalModes:
    """Canonical form data of a real antisymmetric matrix B.

    ``nu`` holds the L = dim/2 mode amplitudes (descending, all >= 0) and
    ``V`` the real orthogonal transformation with

        V @ B @ V.T = direct_sum_l  nu_l * [[0, 1], [-1, 0]]
    """

    nu: np.ndarray
    V: np.ndarray

    @property
    def n_modes(self) -> int:
        return len(self.nu)

    def canonical_matrix(self) -> np.ndarray:
        """The block-diagonal target matrix ``direct_sum nu_l * J2``."""
        dim = 2 * self.n_modes
        c = np.zeros((dim, dim))
        for l, nu in enumerate(self.nu):
            c[2 * l, 2 * l + 1] = nu
            c[2 * l + 1, 2 * l] = -nu
        return c


def _fix_phase(w: np.ndarray) -> np.ndarray:
    """Rotate a complex vector's global phase so its first significant
    component is real positive.  Makes eigenvector pairing reproducible."""
    idx = int(np.argmax(np.abs(w)))
    pivot = w[idx]
    if abs(pivot) == 0.0:
        return w
    return w * (np.conj(pivot) / abs(pivot))


def antisym_canonical(b: np.ndarray, zero_tol: float | None = None) -> CanonicalModes:
    """Reduce a real antisymmetric matrix to canonical 2x2 block form.

    Route: eigendecompose the Hermitian matrix ``i B`` (spectrum comes in
    ``+-nu_l`` pairs), build real orthonormal row pairs from the positive
    branch, and complete with a real null-space basis for modes with
    ``nu = 0``.  Modes are returned with ``nu`` descending.
    """
    b = check_antisymmetric(b, name="antisym_canonical input")
    dim = b.shape[0]
    n_modes = dim // 2
    w, vec = np.linalg.eigh(1j * b)
    if zero_tol is None:
        zero_tol = 1e-12 * max(float(np.max(np.abs(w))), 1.0)

    order = np.argsort(w)[::-1]
    nus: list[float] = []
    rows: list[np.ndarray] = []
    for idx in order[:n_modes]:
        if w[idx] <= zero_tol:
            break
        wv = _fix_phase(vec[:, idx])
        u = np.sqrt(2.0) * wv.real  # B u = nu v
        v = np.sqrt(2.0) * wv.imag  # B v = -nu u
        rows.append(v)
        rows.append(u)
        nus.append(float(w[idx]))

    n_zero = n_modes - len(nus)
    if n_zero:
        # Null modes: any real orthonormal basis of ker(B) completes V, since
        # the corresponding blocks are 0 * J2.  Re/Im parts of the near-zero
        # eigenvectors span that kernel; SVD gives a rank-robust orthobasis.
        zero_cols = np.abs(w) <= zero_tol
        raw = np.hstack([vec[:, zero_cols].real, vec[:, zero_cols].imag])
        if rows:
            basis = np.array(rows).T
            raw = raw - basis @ (basis.T @ raw)
        u, s, _ = np.linalg.svd(raw, full_matrices=False)
        null_vecs = u[:, s > 1e-7]
        if null_vecs.shape[1] != 2 * n_zero:
            raise ContractViolation(
                f"kernel dimension mismatch in canonical form: found "
                f"{null_vecs.shape[1]} null vectors, expected {2 * n_zero}"
            )
        for j in range(2 * n_zero):
            rows.append(null_vecs[:, j])
        nus.extend([0.0] * n_zero)

    v_mat = np.array(rows)
    return CanonicalModes(nu=np.array(nus), V=v_mat)


def fidelity_op_spectrum_raw(rho1: np.ndarray, rho2: np.ndarray) -> np.ndarray:
    """Eigenvalues of sqrt(sqrt(rho1) rho2 sqrt(rho1)), descending.

    Since sqrt(rho1) rho2 sqrt(rho1) = A^dag A with A = sqrt(rho2) sqrt(rho1),
    the eigenvalues are the singular values of A; computing them by SVD
    avoids squaring (which would halve the precision of small eigenvalues).

    No density-matrix validation: accepts any PSD Hermitian pair of equal
    dimension (used blockwise on sub-normalized blocks).
    """
    a = psd_sqrt(rho2) @ psd_sqrt(rho1)
    return np.linalg.svd(a, compute_uv=False)


def fidelity_op_spectrum(rho1: np.ndarray, rho2: np.ndarray) -> np.ndarray:
    """Fidelity-operator spectrum of two density matrices, descending.

    The sum of the returned eigenvalues is the Uhlmann fidelity
    F(rho1, rho2); with ``rho1 == rho2`` it reduces to the spectrum of the
    state itself (entanglement case).
    """
    rho1 = check_density_matrix(rho1, name="rho1")
    rho2 = check_density_matrix(rho2, name="rho2")
    if rho1.shape != rho2.shape:
        raise ContractViolation(
            f"dimension mismatch: rho1 is {rho1.shape[0]}x{rho1.shape[0]}, "
            f"rho2 is {rho2.shape[0]}x{rho2.shape[0]}"
        )
    return fidelity_op_spectrum_raw(rho1, rho2)
