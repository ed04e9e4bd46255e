"""Assisted-state-discrimination application.

Builds the post-interaction system+ancilla state of the two-state
discrimination protocol, specializes it to the optimal one-parameter family
``rho_c``, and evaluates the closed-form outcome probability, conditional
spectrum and weak conditional entropy for a strength-x measurement on the
system qubit.  The super discord of ``rho_c`` is a one-dimensional
minimization over the polar angle; the azimuthal angle provably drops out,
which is asserted numerically on first use rather than trusted.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import quantum
from ._backend import kernels
from .errors import BadParamsError
from .quantum import DensityMatrix, Side, signed_tanh

THETA_GRID = 256
THETA_REFINE_TOL = 1e-10

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class RRAParams:
    """Prior probability and ancilla amplitudes of the discrimination protocol."""

    p_plus: float
    alpha_plus: complex
    alpha_minus: complex

    def __post_init__(self):
        if not (0.0 < self.p_plus < 1.0):
            raise BadParamsError(f"p_plus = {self.p_plus!r} outside (0, 1)")
        for name in ("alpha_plus", "alpha_minus"):
            if abs(getattr(self, name)) > 1.0:
                raise BadParamsError(f"|{name}| = {abs(getattr(self, name))!r} exceeds 1")

    @property
    def p_minus(self) -> float:
        return 1.0 - self.p_plus


def general_state(params: RRAParams) -> DensityMatrix:
    """Post-interaction state: mixture of sqrt(1-|a|^2)|+->|0> + a|0>|1>
    branches, system qubit left, ancilla right."""
    rho = np.zeros((4, 4), dtype=np.complex128)
    for p, alpha, sign in (
        (params.p_plus, complex(params.alpha_plus), 1.0),
        (params.p_minus, complex(params.alpha_minus), -1.0),
    ):
        w = math.sqrt(max(0.0, 1.0 - abs(alpha) ** 2))
        ket = np.array([w / _SQRT2, alpha, sign * w / _SQRT2, 0.0], dtype=np.complex128)
        rho += p * np.outer(ket, ket.conj())
    return quantum.validate_density(rho)


def optimal_state(c: float) -> DensityMatrix:
    """The optimal-discrimination family rho_c (equal priors, real overlap c).

    Spectrum is {(1+c^2)/2, (1-c^2)/2, 0, 0}; the system marginal carries
    the same entropy as the joint state.
    """
    c = float(c)
    if not (0.0 <= c <= 1.0):
        raise BadParamsError(f"c = {c!r} outside [0, 1]")
    k = _SQRT2 * c * math.sqrt(1.0 - c * c) / 2.0
    rho = np.zeros((4, 4), dtype=np.complex128)
    rho[0, 0] = (1.0 - c * c) / 2.0
    rho[2, 2] = (1.0 - c * c) / 2.0
    rho[1, 1] = c * c
    rho[0, 1] = k
    rho[1, 0] = k
    return quantum.validate_density(rho)


def _tanh_cos(c: float, x: float, theta: float) -> float:
    if not (0.0 <= c <= 1.0):
        raise BadParamsError(f"c = {c!r} outside [0, 1]")
    return signed_tanh(quantum._check_strength(x)) * math.cos(2.0 * theta)


def outcome_probability(c: float, x: float, theta: float) -> float:
    """p(x) = (1 - tanh(x) cos(2 theta) c^2) / 2 for measuring the system qubit.

    Computed so that the two branch probabilities sum to exactly 1: the
    smaller one is derived from the larger by an exact subtraction.
    """
    h = 0.5 * (_tanh_cos(c, x, theta) * (c * c))
    if h <= 0.0:
        return 0.5 - h
    return 1.0 - (0.5 + h)  # exact: 0.5 + h is in [0.5, 1]


def conditional_eigenvalues(c: float, x: float, theta: float) -> tuple[float, float]:
    """Spectrum of the ancilla state conditioned on the P(x) branch.

    The pair sums to exactly 1 (the minus eigenvalue is an exact
    complement) and both lie in [0, 1].
    """
    u = _tanh_cos(c, x, theta)
    csq = c * c
    den = 1.0 - u * csq
    if den <= 0.0:
        return 1.0, 0.0
    # Factored radicand 1 - 2c^2 + 2c^4 - 2c^2 u + (2c^2 - c^4) u^2; this
    # form stays exact at the degenerate boundary c = 1.
    rad = den * den - 2.0 * csq * (1.0 - csq) * (1.0 - u * u)
    lam_plus = (den + math.sqrt(max(rad, 0.0))) / (2.0 * den)
    if lam_plus > 1.0:
        lam_plus = 1.0
    return lam_plus, 1.0 - lam_plus


def _entropy_of_pair(lam_plus: float, lam_minus: float) -> float:
    ent = 0.0
    if 0.0 < lam_plus < 1.0:
        ent -= lam_plus * math.log2(lam_plus)
    if 0.0 < lam_minus < 1.0:
        ent -= lam_minus * math.log2(lam_minus)
    return ent


def weak_conditional_entropy(c: float, x: float, theta: float) -> float:
    """Closed-form average ancilla entropy over the two weak branches."""
    total = 0.0
    for strength in (x, -x):
        p = outcome_probability(c, strength, theta)
        total += p * _entropy_of_pair(*conditional_eigenvalues(c, strength, theta))
    return total


_phi_independence_checked = False


def _assert_phi_independent():
    """One-time numerical check that the generic objective on rho_c does not
    depend on the azimuthal angle, justifying the theta-only minimization."""
    global _phi_independence_checked
    if _phi_independence_checked:
        return
    phis = (0.0, 0.9, 2.1, 3.3, 4.5, 5.7)
    for c in (0.3, 0.7):
        mat = np.ascontiguousarray(optimal_state(c).matrix)
        for x in (0.5, 1.5):
            for theta in (0.3, 1.1):
                vals = [
                    kernels.weak_cond_entropy(mat, theta, phi, x, kernels.SIDE_A)
                    for phi in phis
                ]
                spread = max(vals) - min(vals)
                if spread > 1e-12:
                    raise AssertionError(
                        f"objective depends on phi (spread {spread:.3e}) at "
                        f"c={c}, x={x}, theta={theta}"
                    )
    _phi_independence_checked = True


def _minimize_over_theta(c: float, x: float) -> tuple[float, float]:
    """Grid scan plus golden-section refinement of the analytic entropy."""
    best_val = math.inf
    best_theta = 0.0

    def evaluate(theta: float) -> float:
        nonlocal best_val, best_theta
        v = weak_conditional_entropy(c, x, theta)
        if v < best_val:
            best_val = v
            best_theta = theta
        return v

    grid = np.linspace(0.0, math.pi / 2, THETA_GRID)
    values = [evaluate(float(t)) for t in grid]
    idx = int(np.argmin(values))
    lo = float(grid[max(idx - 1, 0)])
    hi = float(grid[min(idx + 1, THETA_GRID - 1)])

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c1 = b - invphi * (b - a)
    d1 = a + invphi * (b - a)
    fc = evaluate(c1)
    fd = evaluate(d1)
    while b - a > THETA_REFINE_TOL:
        if fc < fd:
            b, d1, fd = d1, c1, fc
            c1 = b - invphi * (b - a)
            fc = evaluate(c1)
        else:
            a, c1, fc = c1, d1, fd
            d1 = a + invphi * (b - a)
            fd = evaluate(d1)
    return best_val, best_theta


def _conditional_entropy_of(rho: DensityMatrix) -> float:
    # S(ancilla | system), computed rather than assumed zero.
    return quantum.entropy(rho) - quantum.entropy(quantum.partial_trace(rho, Side.A))


def super_discord(c: float, x: float) -> tuple[float, float]:
    """Super discord of rho_c for a strength-x measurement on the system
    qubit, minimized over the polar angle.  Returns (value, theta_opt)."""
    quantum._check_strength(x)
    _assert_phi_independent()
    rho = optimal_state(c)
    s_w, theta_opt = _minimize_over_theta(c, x)
    value = s_w - _conditional_entropy_of(rho)
    if -1e-9 <= value < 0.0:
        value = 0.0
    return float(value), float(theta_opt)


@dataclass(frozen=True)
class SweepRecord:
    """One cell of the (overlap, strength) super-discord surface."""

    c: float
    x: float
    theta_opt: float
    super_discord: float

    def __post_init__(self):
        if self.super_discord < 0.0:
            raise ValueError(f"super_discord = {self.super_discord!r} negative")


def sweep(c_grid, x_grid) -> list[SweepRecord]:
    """Evaluate the surface cell by cell, c-major then x, deterministically."""
    c_values = [float(c) for c in c_grid]
    x_values = [quantum._check_strength(x) for x in x_grid]
    if not c_values or not x_values:
        raise BadParamsError("sweep grids must be nonempty")
    _assert_phi_independent()
    records = []
    for c in c_values:
        cond = _conditional_entropy_of(optimal_state(c))
        for x in x_values:
            s_w, theta_opt = _minimize_over_theta(c, x)
            value = s_w - cond
            if -1e-9 <= value < 0.0:
                value = 0.0
            records.append(SweepRecord(c=c, x=x, theta_opt=theta_opt, super_discord=value))
    return records


CSV_HEADER = "c,x,theta_opt,super_discord"


def write_sweep_csv(records, path) -> None:
    """UTF-8 CSV, one row per record, floats at 12 significant digits."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(
                f"{rec.c:.12g},{rec.x:.12g},{rec.theta_opt:.12g},{rec.super_discord:.12g}\n"
            )
