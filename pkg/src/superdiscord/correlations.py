"""Correlation measures for two-qubit states.

Mutual information, classical correlation, discord and the weak-measurement
super discord, together with the shared basis optimizer and a numerical
check of the seven-way equivalence between a state being product and its
super discord vanishing.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import linalg, quantum
from ._backend import kernels
from .errors import (
    BadDimError,
    InconsistentVerdictError,
    NonFiniteObjectiveError,
)
from .quantum import DensityMatrix, MeasurementBasis, Side, WeakMeasurementPair

GRID_THETA = 64
GRID_PHI = 64
SIMPLEX_DIAMETER_TOL = 1e-9
SIMPLEX_MAX_ITER = 500

CLAMP_FLOOR = -1e-9

ZERO_TOL = 1e-6
EQUAL_TOL = 1e-5
PRODUCT_TOL = 1e-7
DEFAULT_X_LIST = (0.5, 1.0, 2.0)


def _side_int(side: Side) -> int:
    return kernels.SIDE_B if side is Side.B else kernels.SIDE_A


def _require_two_qubits(rho: DensityMatrix):
    if rho.dim != 4:
        raise BadDimError("correlation measures need a two-qubit state")


def _clamp_tiny(value: float) -> tuple[float, bool]:
    if CLAMP_FLOOR <= value < 0.0:
        return 0.0, True
    return value, False


def mutual_information(rho: DensityMatrix) -> float:
    """I = S(A) + S(B) - S(AB), in bits."""
    _require_two_qubits(rho)
    val = (
        quantum.entropy(quantum.partial_trace(rho, Side.A))
        + quantum.entropy(quantum.partial_trace(rho, Side.B))
        - quantum.entropy(rho)
    )
    return _clamp_tiny(val)[0]


def _chart(theta: float, phi: float) -> tuple[float, float]:
    t = min(max(theta, 0.0), math.pi / 2)
    p = phi % (2 * math.pi)
    if p >= 2 * math.pi:
        p = 0.0
    return t, p


def optimize_over_bases(objective, mode: str = "min", grid_fn=None):
    """Minimize or maximize a function of the measurement basis.

    A 64x64 scan of the (theta, phi) chart locates the best cell, then a
    Nelder-Mead simplex refines it until its diameter drops below 1e-9 (or
    500 iterations).  The best value ever evaluated is returned, so in min
    mode the result never exceeds any grid sample.  Ties on the grid break
    toward the lexicographically smallest (theta, phi).

    Parameters
    ----------
    objective : callable
        ``MeasurementBasis -> float``, finite on the whole chart.
    mode : str
        ``"min"`` or ``"max"``.
    grid_fn : callable, optional
        ``(thetas, phis) -> ndarray`` evaluating the objective on the whole
        grid at once; must agree with pointwise calls.  Used by the hot
        paths to hand the scan to the compiled kernel.

    Returns
    -------
    (MeasurementBasis, float)
    """
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    sgn = 1.0 if mode == "min" else -1.0

    thetas = np.linspace(0.0, math.pi / 2, GRID_THETA)
    phis = np.linspace(0.0, 2 * math.pi, GRID_PHI, endpoint=False)

    if grid_fn is not None:
        raw = np.asarray(grid_fn(thetas, phis), dtype=float)
        if raw.shape != (GRID_THETA, GRID_PHI):
            raise ValueError("grid_fn returned a wrongly shaped array")
    else:
        raw = np.empty((GRID_THETA, GRID_PHI))
        for i, th in enumerate(thetas):
            for j, ph in enumerate(phis):
                raw[i, j] = objective(MeasurementBasis(th, ph))
    if not np.all(np.isfinite(raw)):
        raise NonFiniteObjectiveError("objective is not finite on the search grid")

    signed = sgn * raw
    flat = int(np.argmin(signed))  # first occurrence: lexicographic tie-break
    i0, j0 = divmod(flat, GRID_PHI)
    best_val = float(signed[i0, j0])
    best_pt = (float(thetas[i0]), float(phis[j0]))

    def feval(t, p):
        nonlocal best_val, best_pt
        tc, pc = _chart(t, p)
        v = sgn * float(objective(MeasurementBasis(tc, pc)))
        if not math.isfinite(v):
            raise NonFiniteObjectiveError(f"objective not finite at theta={tc}, phi={pc}")
        if v < best_val:
            best_val = v
            best_pt = (tc, pc)
        return v

    # Initial simplex around the best cell, one grid step per direction.
    dt = (math.pi / 2) / (GRID_THETA - 1)
    dp = 2 * math.pi / GRID_PHI
    t0, p0 = best_pt
    if t0 + dt > math.pi / 2:
        dt = -dt
    verts = [
        np.array([t0, p0]),
        np.array([t0 + dt, p0]),
        np.array([t0, p0 + dp]),
    ]
    fvals = [feval(*v) for v in verts]

    for _ in range(SIMPLEX_MAX_ITER):
        order = sorted(range(3), key=lambda k: fvals[k])
        verts = [verts[k] for k in order]
        fvals = [fvals[k] for k in order]
        diam = max(
            float(np.linalg.norm(verts[a] - verts[b]))
            for a in range(3)
            for b in range(a + 1, 3)
        )
        if diam < SIMPLEX_DIAMETER_TOL:
            break
        centroid = 0.5 * (verts[0] + verts[1])
        xr = centroid + (centroid - verts[2])
        fr = feval(*xr)
        if fr < fvals[0]:
            xe = centroid + 2.0 * (centroid - verts[2])
            fe = feval(*xe)
            if fe < fr:
                verts[2], fvals[2] = xe, fe
            else:
                verts[2], fvals[2] = xr, fr
        elif fr < fvals[1]:
            verts[2], fvals[2] = xr, fr
        else:
            xc = centroid + 0.5 * (verts[2] - centroid)
            fc = feval(*xc)
            if fc < fvals[2]:
                verts[2], fvals[2] = xc, fc
            else:
                for k in (1, 2):
                    verts[k] = verts[0] + 0.5 * (verts[k] - verts[0])
                    fvals[k] = feval(*verts[k])

    theta_b, phi_b = best_pt
    return MeasurementBasis(theta_b, phi_b), sgn * best_val


def classical_correlation(rho: DensityMatrix, side: Side) -> tuple[float, MeasurementBasis]:
    """Maximum post-measurement mutual information over rank-one projective
    measurements on ``side``; returns the value and the maximizing basis.

    Equivalent to minimizing the average conditional entropy of the
    unmeasured qubit: for rank-one projectors the post-measurement mutual
    information collapses to S(unmeasured) - sum_k p_k S(conditional_k).
    """
    _require_two_qubits(rho)
    si = _side_int(side)
    mat = np.ascontiguousarray(rho.matrix)
    s_unmeasured = quantum.entropy(quantum.partial_trace(rho, side.other))

    def objective(basis: MeasurementBasis) -> float:
        return kernels.proj_avg_cond_entropy(mat, basis.theta, basis.phi, si)

    def grid_fn(thetas, phis):
        return kernels.proj_avg_cond_entropy_grid(mat, si, thetas, phis)

    basis, avg_cond = optimize_over_bases(objective, "min", grid_fn=grid_fn)
    value = _clamp_tiny(s_unmeasured - avg_cond)[0]
    return max(value, 0.0), basis


def discord(rho: DensityMatrix, side: Side) -> float:
    """Quantum discord: mutual information minus classical correlation."""
    value = mutual_information(rho) - classical_correlation(rho, side)[0]
    return _clamp_tiny(value)[0]


def weak_conditional_entropy(
    rho: DensityMatrix, pair: WeakMeasurementPair, side: Side
) -> float:
    """p(x) S(rho_{|P(x)}) + p(-x) S(rho_{|P(-x)}) through the generic
    measurement pipeline; negligible branches contribute zero."""
    plus, minus = quantum.weak_outcomes(rho, pair, side)
    total = 0.0
    for outcome in (plus, minus):
        if not outcome.negligible:
            total += outcome.probability * quantum.entropy(outcome.conditional)
    return total


def super_discord(rho: DensityMatrix, x: float, side: Side) -> tuple[float, MeasurementBasis]:
    """Super discord at strength ``x``: minimized weak conditional entropy
    minus the conditional entropy S(unmeasured | measured).

    The returned value is the optimizer's estimate of the minimum (an upper
    bound on the true one) with tiny negatives clamped to zero.
    """
    _require_two_qubits(rho)
    x = quantum._check_strength(x)
    si = _side_int(side)
    mat = np.ascontiguousarray(rho.matrix)
    cond_entropy = quantum.entropy(rho) - quantum.entropy(quantum.partial_trace(rho, side))

    def objective(basis: MeasurementBasis) -> float:
        return kernels.weak_cond_entropy(mat, basis.theta, basis.phi, x, si)

    def grid_fn(thetas, phis):
        return kernels.weak_cond_entropy_grid(mat, x, si, thetas, phis)

    basis, s_w = optimize_over_bases(objective, "min", grid_fn=grid_fn)
    value = _clamp_tiny(s_w - cond_entropy)[0]
    return value, basis


def is_product(rho: DensityMatrix, tol: float) -> bool:
    """True iff rho equals the tensor product of its own marginals within
    ``tol`` in Frobenius distance (an exact characterization)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    _require_two_qubits(rho)
    marginal_product = linalg.kron(
        quantum.partial_trace(rho, Side.A).matrix,
        quantum.partial_trace(rho, Side.B).matrix,
    )
    return linalg.frobenius_distance(rho.matrix, marginal_product) <= tol


@dataclass(frozen=True)
class TheoremVerdict:
    """The seven equivalent vanishing predicates, evaluated numerically.

    Construction enforces the equivalence: if the predicates disagree
    beyond the recorded thresholds, :func:`theorem_report` raises
    InconsistentVerdictError instead of returning a verdict.
    """

    product_state: bool
    zero_classical_correlation: bool
    zero_super_discord: bool
    zero_mutual_information: bool
    discord_equals_super_discord: bool
    discord_equals_mutual_information: bool
    super_discord_equals_mutual_information: bool
    zero_tol: float
    equal_tol: float
    product_tol: float
    x_list: tuple
    mutual_information: float
    classical_correlation: float
    discord: float
    super_discords: tuple

    def as_tuple(self) -> tuple:
        return (
            self.product_state,
            self.zero_classical_correlation,
            self.zero_super_discord,
            self.zero_mutual_information,
            self.discord_equals_super_discord,
            self.discord_equals_mutual_information,
            self.super_discord_equals_mutual_information,
        )

    @property
    def all_true(self) -> bool:
        return all(self.as_tuple())

    @property
    def all_false(self) -> bool:
        return not any(self.as_tuple())


def theorem_report(
    rho: DensityMatrix,
    x_list=DEFAULT_X_LIST,
    side: Side = Side.B,
    zero_tol: float = ZERO_TOL,
    equal_tol: float = EQUAL_TOL,
    product_tol: float = PRODUCT_TOL,
) -> TheoremVerdict:
    """Evaluate the seven equivalent statements on vanishing super discord.

    Strength-dependent predicates are conjoined over every ``x`` in
    ``x_list``.  Raises InconsistentVerdictError when the seven answers are
    neither all true nor all false.
    """
    _require_two_qubits(rho)
    xs = tuple(quantum._check_strength(x) for x in x_list)
    if not xs:
        raise ValueError("x_list must not be empty")

    i_val = mutual_information(rho)
    c_val = classical_correlation(rho, side)[0]
    d_val = _clamp_tiny(i_val - c_val)[0]
    dw_vals = tuple(super_discord(rho, x, side)[0] for x in xs)

    verdict = TheoremVerdict(
        product_state=is_product(rho, product_tol),
        zero_classical_correlation=c_val <= zero_tol,
        zero_super_discord=all(dw <= zero_tol for dw in dw_vals),
        zero_mutual_information=i_val <= zero_tol,
        discord_equals_super_discord=all(abs(dw - d_val) <= equal_tol for dw in dw_vals),
        discord_equals_mutual_information=abs(d_val - i_val) <= equal_tol,
        super_discord_equals_mutual_information=all(abs(dw - i_val) <= equal_tol for dw in dw_vals),
        zero_tol=zero_tol,
        equal_tol=equal_tol,
        product_tol=product_tol,
        x_list=xs,
        mutual_information=i_val,
        classical_correlation=c_val,
        discord=d_val,
        super_discords=dw_vals,
    )
    if not (verdict.all_true or verdict.all_false):
        raise InconsistentVerdictError(
            "equivalence predicates disagree: "
            f"{verdict.as_tuple()} with I={i_val:.3e} C={c_val:.3e} "
            f"D={d_val:.3e} Dw={[f'{v:.3e}' for v in dw_vals]}"
        )
    return verdict


@dataclass(frozen=True)
class CorrelationReport:
    """All four measures of one state at one strength, with optimal bases."""

    x: float
    side: Side
    mutual_info: float
    classical_corr: float
    discord: float
    super_discord: float
    argmax_basis_C: MeasurementBasis
    argmin_basis_Dw: MeasurementBasis
    clamped: tuple = ()

    def __post_init__(self):
        for name in ("mutual_info", "classical_corr", "discord", "super_discord"):
            if getattr(self, name) < CLAMP_FLOOR:
                raise ValueError(f"{name} = {getattr(self, name)!r} below numerical floor")
        if self.mutual_info + 1e-4 < self.super_discord:
            raise ValueError("super discord exceeds mutual information beyond slack")
        if self.super_discord < self.discord - 1e-6:
            raise ValueError("super discord below discord beyond slack")


def compute_report(rho: DensityMatrix, x: float, side: Side) -> CorrelationReport:
    """Evaluate I, C, D and D_w for one state and assemble the report."""
    _require_two_qubits(rho)
    clamped = []
    i_val = mutual_information(rho)
    c_val, basis_c = classical_correlation(rho, side)
    d_raw = i_val - c_val
    d_val, was = _clamp_tiny(d_raw)
    if was:
        clamped.append("discord")
    dw_val, basis_dw = super_discord(rho, x, side)
    return CorrelationReport(
        x=float(x),
        side=side,
        mutual_info=i_val,
        classical_corr=c_val,
        discord=d_val,
        super_discord=dw_val,
        argmax_basis_C=basis_c,
        argmin_basis_Dw=basis_dw,
        clamped=tuple(clamped),
    )


def _round12(v: float) -> float:
    return float(f"{v:.12g}")


def report_to_json(report: CorrelationReport) -> dict:
    """JSON-ready dict with floats rounded to 12 significant digits."""
    return {
        "x": _round12(report.x),
        "side": report.side.value,
        "mutual_info": _round12(report.mutual_info),
        "classical_corr": _round12(report.classical_corr),
        "discord": _round12(report.discord),
        "super_discord": _round12(report.super_discord),
        "argmax_basis_C": {
            "theta": _round12(report.argmax_basis_C.theta),
            "phi": _round12(report.argmax_basis_C.phi),
        },
        "argmin_basis_Dw": {
            "theta": _round12(report.argmin_basis_Dw.theta),
            "phi": _round12(report.argmin_basis_Dw.phi),
        },
        "clamped": list(report.clamped),
    }
