"""Dense complex-matrix helpers for dimensions up to 4.

Everything here operates on plain ``numpy`` arrays of ``complex128``.  The
eigensolver is a cyclic Jacobi iteration, which is exact enough for the
2x2 and 4x4 Hermitian matrices this package deals with and keeps the hot
paths free of LAPACK call overhead.
"""

import math

import numpy as np

from .errors import NoConvergenceError, NotHermitianError, ShapeMismatchError

HERMITIAN_TOL = 1e-10
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def as_complex_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeMismatchError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product a (x) b with the left operand as the slow index."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def frobenius_distance(a, b) -> float:
    """sqrt(sum |a - b|^2); zero iff the matrices are equal."""
    ma = as_complex_matrix(a)
    mb = as_complex_matrix(b)
    if ma.shape != mb.shape:
        raise ShapeMismatchError(f"shape mismatch: {ma.shape} vs {mb.shape}")
    return float(np.linalg.norm(ma - mb))


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def hermitian_eigen(a) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    a : array_like
        Square matrix, Hermitian within ``HERMITIAN_TOL`` (max entry of
        ``|a - a^dagger|``).

    Returns
    -------
    w : ndarray
        Real eigenvalues in ascending order.
    v : ndarray
        Unitary matrix whose columns are the matching eigenvectors, so
        that ``a = v @ diag(w) @ v.conj().T`` up to round-off.

    Raises
    ------
    NotHermitianError
        If the Hermiticity tolerance is exceeded.
    NoConvergenceError
        If the off-diagonal norm is still above threshold after the
        sweep cap.
    """
    m = as_complex_matrix(a)
    n, n2 = m.shape
    if n != n2:
        raise ShapeMismatchError(f"matrix must be square, got {m.shape}")
    dev = float(np.max(np.abs(m - m.conj().T))) if n else 0.0
    if dev > HERMITIAN_TOL:
        raise NotHermitianError(f"max |a - a^dagger| = {dev:.3e} exceeds {HERMITIAN_TOL:.0e}")

    w = 0.5 * (m + m.conj().T)
    v = np.eye(n, dtype=np.complex128)
    converged = _off_diagonal_norm(w) <= JACOBI_OFF_TOL
    for _ in range(JACOBI_MAX_SWEEPS):
        if converged:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = w[p, q]
                mag = abs(beta)
                if mag == 0.0:
                    continue
                phase = beta / mag
                ang = 0.5 * math.atan2(2.0 * mag, w[p, p].real - w[q, q].real)
                c = math.cos(ang)
                s = math.sin(ang)
                e = phase.conjugate()  # e^{-i arg(beta)}
                # Columns: (a J) with J = [[c, -s], [s e^{-i phi}, c e^{-i phi}]]
                col_p = w[:, p].copy()
                col_q = w[:, q].copy()
                w[:, p] = c * col_p + (s * e) * col_q
                w[:, q] = -s * col_p + (c * e) * col_q
                # Rows: J^dagger (a J)
                row_p = w[p, :].copy()
                row_q = w[q, :].copy()
                ec = phase  # conj of e
                w[p, :] = c * row_p + (s * ec) * row_q
                w[q, :] = -s * row_p + (c * ec) * row_q
                w[p, q] = 0.0
                w[q, p] = 0.0
                w[p, p] = w[p, p].real
                w[q, q] = w[q, q].real
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p + (s * e) * vcol_q
                v[:, q] = -s * vcol_p + (c * e) * vcol_q
        converged = _off_diagonal_norm(w) <= JACOBI_OFF_TOL
    if not converged:
        raise NoConvergenceError(
            f"Jacobi sweep cap ({JACOBI_MAX_SWEEPS}) reached, off-diagonal norm "
            f"{_off_diagonal_norm(w):.3e}"
        )
    vals = np.diag(w).real.copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], v[:, order]
