"""Pure-numpy implementation of the hot measurement-entropy kernels.

Same call surface as the compiled extension ``_kernels``; used when the
extension is unavailable.  Scalar calls work entry-by-entry; grid calls are
vectorized over the basis angles in chunks.

The contraction shortcut used throughout: sandwiching by a Hermitian M on
one qubit and tracing that qubit out only ever needs Q = M^2, because
Tr_B((I (x) M) rho (I (x) M)) = Tr_B(rho (I (x) M^2)).  For the weak pair,
Q(+-x) = (I -+ tanh(x) n.sigma) / 2 where n is the Bloch vector of the
basis; for projectors, Q = pi_k itself.
"""

import math

import numpy as np

BACKEND_NAME = "python"

SIDE_A = 0
SIDE_B = 1

_NEGLIGIBLE = 1e-14
_GRID_CHUNK = 16384


def _signed_tanh(x: float) -> float:
    return math.copysign(math.tanh(abs(x)), x)


def _branch_entropy_term(w00, w01, w11) -> float:
    """p * S(W/p) for an unnormalized 2x2 Hermitian branch W."""
    p = w00.real + w11.real
    if p < _NEGLIGIBLE:
        return 0.0
    a = w00.real / p
    d = w11.real / p
    h = math.hypot(0.5 * (a - d), abs(w01) / p)
    mid = 0.5 * (a + d)
    lam_hi = min(1.0, max(0.0, mid + h))
    lam_lo = min(1.0, max(0.0, mid - h))
    ent = 0.0
    if lam_hi > 0.0:
        ent -= lam_hi * math.log2(lam_hi)
    if lam_lo > 0.0:
        ent -= lam_lo * math.log2(lam_lo)
    return p * ent


def _contract(r: np.ndarray, q00, q01, q10, q11, side: int):
    """Unnormalized conditional of the unmeasured qubit for weight matrix Q."""
    if side == SIDE_B:
        w00 = r[0, 0] * q00 + r[0, 1] * q10 + r[1, 0] * q01 + r[1, 1] * q11
        w01 = r[0, 2] * q00 + r[0, 3] * q10 + r[1, 2] * q01 + r[1, 3] * q11
        w11 = r[2, 2] * q00 + r[2, 3] * q10 + r[3, 2] * q01 + r[3, 3] * q11
    else:
        w00 = r[0, 0] * q00 + r[0, 2] * q10 + r[2, 0] * q01 + r[2, 2] * q11
        w01 = r[0, 1] * q00 + r[0, 3] * q10 + r[2, 1] * q01 + r[2, 3] * q11
        w11 = r[1, 1] * q00 + r[1, 3] * q10 + r[3, 1] * q01 + r[3, 3] * q11
    return w00, w01, w11


def weak_cond_entropy(rho: np.ndarray, theta: float, phi: float, x: float, side: int) -> float:
    """Average post-weak-measurement entropy of the unmeasured qubit."""
    t = _signed_tanh(x)
    s2t = math.sin(2.0 * theta)
    nx = s2t * math.cos(phi)
    ny = s2t * math.sin(phi)
    nz = math.cos(2.0 * theta)
    total = 0.0
    for sign in (1.0, -1.0):
        u = sign * t
        q00 = 0.5 * (1.0 - u * nz)
        q11 = 0.5 * (1.0 + u * nz)
        q01 = complex(-0.5 * u * nx, 0.5 * u * ny)
        q10 = q01.conjugate()
        total += _branch_entropy_term(*_contract(rho, q00, q01, q10, q11, side))
    return total


def proj_avg_cond_entropy(rho: np.ndarray, theta: float, phi: float, side: int) -> float:
    """sum_k p_k S(conditional_k) for the projective pair of the basis."""
    s2t = math.sin(2.0 * theta)
    nx = s2t * math.cos(phi)
    ny = s2t * math.sin(phi)
    nz = math.cos(2.0 * theta)
    total = 0.0
    for sign in (1.0, -1.0):
        q00 = 0.5 * (1.0 + sign * nz)
        q11 = 0.5 * (1.0 - sign * nz)
        q01 = complex(0.5 * sign * nx, -0.5 * sign * ny)
        q10 = q01.conjugate()
        total += _branch_entropy_term(*_contract(rho, q00, q01, q10, q11, side))
    return total


def _bloch_vectors(thetas: np.ndarray, phis: np.ndarray):
    th = np.repeat(np.asarray(thetas, dtype=float), len(phis))
    ph = np.tile(np.asarray(phis, dtype=float), len(thetas))
    s2t = np.sin(2.0 * th)
    return s2t * np.cos(ph), s2t * np.sin(ph), np.cos(2.0 * th)


def _q_stack(nx, ny, nz, u):
    """Weight matrices (m, 2, 2) for Q = (I + u n.sigma) / 2."""
    m = len(nx)
    q = np.empty((m, 2, 2), dtype=np.complex128)
    q[:, 0, 0] = 0.5 * (1.0 + u * nz)
    q[:, 1, 1] = 0.5 * (1.0 - u * nz)
    q[:, 0, 1] = 0.5 * u * (nx - 1j * ny)
    q[:, 1, 0] = np.conj(q[:, 0, 1])
    return q


def _batched_entropy_terms(tens: np.ndarray, q: np.ndarray, side: int) -> np.ndarray:
    if side == SIDE_B:
        w = np.einsum("abcd,ndb->nac", tens, q)
    else:
        w = np.einsum("abcd,nca->nbd", tens, q)
    p = w[:, 0, 0].real + w[:, 1, 1].real
    live = p >= _NEGLIGIBLE
    safe_p = np.where(live, p, 1.0)
    a = w[:, 0, 0].real / safe_p
    d = w[:, 1, 1].real / safe_p
    h = np.hypot(0.5 * (a - d), np.abs(w[:, 0, 1]) / safe_p)
    mid = 0.5 * (a + d)
    out = np.zeros_like(p)
    for lam in (np.clip(mid + h, 0.0, 1.0), np.clip(mid - h, 0.0, 1.0)):
        pos = lam > 0.0
        out -= np.where(pos, lam * np.log2(np.where(pos, lam, 1.0)), 0.0)
    return np.where(live, p * out, 0.0)


def weak_cond_entropy_grid(
    rho: np.ndarray, x: float, side: int, thetas: np.ndarray, phis: np.ndarray
) -> np.ndarray:
    t = _signed_tanh(x)
    tens = np.ascontiguousarray(rho, dtype=np.complex128).reshape(2, 2, 2, 2)
    nx, ny, nz = _bloch_vectors(thetas, phis)
    total = np.empty(len(nx))
    for lo in range(0, len(nx), _GRID_CHUNK):
        hi = lo + _GRID_CHUNK
        cx, cy, cz = nx[lo:hi], ny[lo:hi], nz[lo:hi]
        acc = _batched_entropy_terms(tens, _q_stack(cx, cy, cz, -t), side)
        acc = acc + _batched_entropy_terms(tens, _q_stack(cx, cy, cz, t), side)
        total[lo:hi] = acc
    return total.reshape(len(thetas), len(phis))


def proj_avg_cond_entropy_grid(
    rho: np.ndarray, side: int, thetas: np.ndarray, phis: np.ndarray
) -> np.ndarray:
    tens = np.ascontiguousarray(rho, dtype=np.complex128).reshape(2, 2, 2, 2)
    nx, ny, nz = _bloch_vectors(thetas, phis)
    total = np.empty(len(nx))
    for lo in range(0, len(nx), _GRID_CHUNK):
        hi = lo + _GRID_CHUNK
        cx, cy, cz = nx[lo:hi], ny[lo:hi], nz[lo:hi]
        acc = _batched_entropy_terms(tens, _q_stack(cx, cy, cz, 1.0), side)
        acc = acc + _batched_entropy_terms(tens, _q_stack(cx, cy, cz, -1.0), side)
        total[lo:hi] = acc
    return total.reshape(len(thetas), len(phis))
