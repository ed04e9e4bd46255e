# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled measurement-entropy kernels.

Mirrors ``_kernels_py``.  The 4x4 state is unpacked into locals once per
call (once per grid for the batched variants), so each basis evaluation is
a handful of complex multiplies plus a closed-form 2x2 eigenproblem.
"""

from libc.math cimport atan2, copysign, cos, fabs, hypot, log2, sin, sqrt, tanh

import numpy as np

BACKEND_NAME = "cython"

SIDE_A = 0
SIDE_B = 1

cdef double _NEGLIGIBLE = 1e-14


cdef struct StateView:
    # Entries of the 4x4 density matrix needed by the contractions.
    double complex r00, r01, r02, r03
    double complex r10, r11, r12, r13
    double complex r20, r21, r22, r23
    double complex r30, r31, r32, r33


cdef inline void _load_state(const double complex[:, :] rho, StateView* sv):
    sv.r00 = rho[0, 0]; sv.r01 = rho[0, 1]; sv.r02 = rho[0, 2]; sv.r03 = rho[0, 3]
    sv.r10 = rho[1, 0]; sv.r11 = rho[1, 1]; sv.r12 = rho[1, 2]; sv.r13 = rho[1, 3]
    sv.r20 = rho[2, 0]; sv.r21 = rho[2, 1]; sv.r22 = rho[2, 2]; sv.r23 = rho[2, 3]
    sv.r30 = rho[3, 0]; sv.r31 = rho[3, 1]; sv.r32 = rho[3, 2]; sv.r33 = rho[3, 3]


cdef inline double _branch_entropy_term(double complex w00, double complex w01,
                                        double complex w11) nogil:
    cdef double p, a, d, h, mid, lam, ent
    p = w00.real + w11.real
    if p < _NEGLIGIBLE:
        return 0.0
    a = w00.real / p
    d = w11.real / p
    h = hypot(0.5 * (a - d), hypot(w01.real, w01.imag) / p)
    mid = 0.5 * (a + d)
    ent = 0.0
    lam = mid + h
    if lam > 1.0:
        lam = 1.0
    if lam > 0.0:
        ent -= lam * log2(lam)
    lam = mid - h
    if lam > 1.0:
        lam = 1.0
    if lam > 0.0:
        ent -= lam * log2(lam)
    return p * ent


cdef inline double _weighted_branch(StateView* sv, double q00r, double complex q01,
                                    double q11r, int side) nogil:
    # Q is Hermitian: q10 = conj(q01), real diagonal.
    cdef double complex w00, w01, w11, q10
    q10 = q01.conjugate()
    if side == 1:  # measure B, condition A
        w00 = sv.r00 * q00r + sv.r01 * q10 + sv.r10 * q01 + sv.r11 * q11r
        w01 = sv.r02 * q00r + sv.r03 * q10 + sv.r12 * q01 + sv.r13 * q11r
        w11 = sv.r22 * q00r + sv.r23 * q10 + sv.r32 * q01 + sv.r33 * q11r
    else:          # measure A, condition B
        w00 = sv.r00 * q00r + sv.r02 * q10 + sv.r20 * q01 + sv.r22 * q11r
        w01 = sv.r01 * q00r + sv.r03 * q10 + sv.r21 * q01 + sv.r23 * q11r
        w11 = sv.r11 * q00r + sv.r13 * q10 + sv.r31 * q01 + sv.r33 * q11r
    return _branch_entropy_term(w00, w01, w11)


cdef inline double _weak_point(StateView* sv, double theta, double phi, double t,
                               int side) nogil:
    cdef double s2t, nx, ny, nz, u, total
    cdef double complex q01
    s2t = sin(2.0 * theta)
    nx = s2t * cos(phi)
    ny = s2t * sin(phi)
    nz = cos(2.0 * theta)
    total = 0.0
    u = t
    q01.real = -0.5 * u * nx
    q01.imag = 0.5 * u * ny
    total += _weighted_branch(sv, 0.5 * (1.0 - u * nz), q01, 0.5 * (1.0 + u * nz), side)
    u = -t
    q01.real = -0.5 * u * nx
    q01.imag = 0.5 * u * ny
    total += _weighted_branch(sv, 0.5 * (1.0 - u * nz), q01, 0.5 * (1.0 + u * nz), side)
    return total


cdef inline double _proj_point(StateView* sv, double theta, double phi, int side) nogil:
    cdef double s2t, nx, ny, nz, sign, total
    cdef double complex q01
    s2t = sin(2.0 * theta)
    nx = s2t * cos(phi)
    ny = s2t * sin(phi)
    nz = cos(2.0 * theta)
    total = 0.0
    sign = 1.0
    q01.real = 0.5 * sign * nx
    q01.imag = -0.5 * sign * ny
    total += _weighted_branch(sv, 0.5 * (1.0 + sign * nz), q01, 0.5 * (1.0 - sign * nz), side)
    sign = -1.0
    q01.real = 0.5 * sign * nx
    q01.imag = -0.5 * sign * ny
    total += _weighted_branch(sv, 0.5 * (1.0 + sign * nz), q01, 0.5 * (1.0 - sign * nz), side)
    return total


cdef inline double _signed_tanh(double x) nogil:
    return copysign(tanh(fabs(x)), x)


def weak_cond_entropy(const double complex[:, :] rho, double theta, double phi, double x, int side):
    """Average post-weak-measurement entropy of the unmeasured qubit."""
    cdef StateView sv
    _load_state(rho, &sv)
    return _weak_point(&sv, theta, phi, _signed_tanh(x), side)


def proj_avg_cond_entropy(const double complex[:, :] rho, double theta, double phi, int side):
    """sum_k p_k S(conditional_k) for the projective pair of the basis."""
    cdef StateView sv
    _load_state(rho, &sv)
    return _proj_point(&sv, theta, phi, side)


def weak_cond_entropy_grid(const double complex[:, :] rho, double x, int side,
                           const double[:] thetas, const double[:] phis):
    cdef StateView sv
    cdef Py_ssize_t i, j, nt = thetas.shape[0], np_ = phis.shape[0]
    cdef double t = _signed_tanh(x)
    _load_state(rho, &sv)
    out = np.empty((nt, np_), dtype=np.float64)
    cdef double[:, ::1] ov = out
    with nogil:
        for i in range(nt):
            for j in range(np_):
                ov[i, j] = _weak_point(&sv, thetas[i], phis[j], t, side)
    return out


def proj_avg_cond_entropy_grid(const double complex[:, :] rho, int side,
                               const double[:] thetas, const double[:] phis):
    cdef StateView sv
    cdef Py_ssize_t i, j, nt = thetas.shape[0], np_ = phis.shape[0]
    _load_state(rho, &sv)
    out = np.empty((nt, np_), dtype=np.float64)
    cdef double[:, ::1] ov = out
    with nogil:
        for i in range(nt):
            for j in range(np_):
                ov[i, j] = _proj_point(&sv, thetas[i], phis[j], side)
    return out
