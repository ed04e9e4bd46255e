"""Two-qubit domain types and operators.

Tensor convention: subsystem A is the left factor, so the product basis is
ordered ``|00>, |01>, |10>, |11>`` and an operator acting on B alone enters
as ``I (x) P``.  All entropies are in bits (log base 2).
"""

import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .errors import (
    BadDimError,
    NonFiniteStrengthError,
    NotPositiveError,
    TraceNotOneError,
    ZeroStrengthError,
)

TRACE_TOL = 1e-10
EIGENVALUE_FLOOR = -1e-10
NEGLIGIBLE_PROB = 1e-14

I2 = np.eye(2, dtype=np.complex128)


class Side(Enum):
    """Which qubit a measurement acts on."""

    A = "A"
    B = "B"

    @property
    def other(self) -> "Side":
        return Side.B if self is Side.A else Side.A


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated qubit or two-qubit state.

    ``eigenvalues`` is the ascending spectrum with the tiny negative dust
    allowed by ``EIGENVALUE_FLOOR`` clipped to zero, ready for entropies.
    Use :func:`validate_density` to construct one.
    """

    matrix: np.ndarray
    dim: int
    eigenvalues: np.ndarray


def validate_density(m) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity; return the validated state.

    Raises
    ------
    BadDimError, NotHermitianError, TraceNotOneError, NotPositiveError
    """
    mat = linalg.as_complex_matrix(m)
    n, n2 = mat.shape
    if n != n2 or n not in (2, 4):
        raise BadDimError(f"expected a 2x2 or 4x4 matrix, got {mat.shape}")
    tr = complex(np.trace(mat))
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOneError(f"trace = {tr:.12g}, expected 1")
    vals, _ = linalg.hermitian_eigen(mat)  # raises NotHermitianError
    if vals[0] < EIGENVALUE_FLOOR:
        raise NotPositiveError(f"min eigenvalue {vals[0]:.3e} below {EIGENVALUE_FLOOR:.0e}")
    clipped = np.clip(vals, 0.0, None)
    out = mat.copy()
    out.setflags(write=False)
    clipped.setflags(write=False)
    return DensityMatrix(matrix=out, dim=n, eigenvalues=clipped)


def partial_trace(rho: DensityMatrix, keep: Side) -> DensityMatrix:
    """Reduced state of the kept qubit of a two-qubit state."""
    if rho.dim != 4:
        raise BadDimError(f"partial trace needs a 4x4 state, got dim={rho.dim}")
    t = rho.matrix.reshape(2, 2, 2, 2)
    if keep is Side.A:
        red = np.trace(t, axis1=1, axis2=3)
    else:
        red = np.trace(t, axis1=0, axis2=2)
    return validate_density(red)


def entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy in bits, with 0 log 0 := 0."""
    s = 0.0
    for lam in rho.eigenvalues:
        if lam > 0.0:
            s -= float(lam) * math.log2(float(lam))
    return min(max(s, 0.0), math.log2(rho.dim))


@dataclass(frozen=True)
class MeasurementBasis:
    """Rank-one projector pair from Bloch angles.

    ``pi_0`` projects on ``cos(theta)|0> + e^{i phi} sin(theta)|1>`` and
    ``pi_1`` is its orthogonal complement.  The chart ``theta in [0, pi/2],
    phi in [0, 2 pi)`` covers every pair up to ordering.
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi / 2):
            raise ValueError(f"theta = {self.theta!r} outside [0, pi/2]")
        if not (0.0 <= self.phi < 2 * math.pi):
            raise ValueError(f"phi = {self.phi!r} outside [0, 2 pi)")

    def ket(self) -> np.ndarray:
        return np.array(
            [math.cos(self.theta), math.sin(self.theta) * np.exp(1j * self.phi)],
            dtype=np.complex128,
        )

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        k = self.ket()
        pi0 = np.outer(k, k.conj())
        return pi0, I2 - pi0


def _check_strength(x: float) -> float:
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise NonFiniteStrengthError(f"strength must be finite, got {x!r}")
    if x == 0.0:
        raise ZeroStrengthError("strength x = 0 is excluded; any nonzero value is accepted")
    return x


def signed_tanh(x: float) -> float:
    """tanh with exact odd symmetry, so negating x relabels the outcome pair bit-for-bit."""
    return math.copysign(math.tanh(abs(x)), x)


@dataclass(frozen=True)
class WeakMeasurementPair:
    """Measurement strength plus the projector pair it dilutes."""

    x: float
    basis: MeasurementBasis

    def __post_init__(self):
        object.__setattr__(self, "x", _check_strength(self.x))


def weak_operators_from_projectors(pi0, pi1, x: float) -> tuple[np.ndarray, np.ndarray]:
    """The operator pair P(x), P(-x) built on an explicit projector pair."""
    x = _check_strength(x)
    t = signed_tanh(x)
    lo = math.sqrt((1.0 - t) / 2.0)
    hi = math.sqrt((1.0 + t) / 2.0)
    px = lo * pi0 + hi * pi1
    pmx = hi * pi0 + lo * pi1
    return px, pmx


def weak_operators(pair: WeakMeasurementPair) -> tuple[np.ndarray, np.ndarray]:
    """P(x) and P(-x): square roots of projectors mixed by tanh(x)."""
    pi0, pi1 = pair.basis.projectors()
    return weak_operators_from_projectors(pi0, pi1, pair.x)


@dataclass(frozen=True)
class WeakOutcome:
    """One branch of a weak measurement.

    ``conditional`` is the reduced state of the unmeasured qubit.  A branch
    whose probability falls below ``NEGLIGIBLE_PROB`` carries a maximally
    mixed placeholder and is flagged ``negligible``.
    """

    probability: float
    conditional: DensityMatrix
    negligible: bool = False


def _embed(op: np.ndarray, side: Side) -> np.ndarray:
    return linalg.kron(I2, op) if side is Side.B else linalg.kron(op, I2)


def _traced_branch(rho: DensityMatrix, op: np.ndarray, side: Side) -> tuple[float, np.ndarray]:
    full = _embed(op, side)
    sandwiched = full @ rho.matrix @ full
    p = float(np.trace(sandwiched).real)
    t = sandwiched.reshape(2, 2, 2, 2)
    if side is Side.B:
        red = np.trace(t, axis1=1, axis2=3)  # keep A
    else:
        red = np.trace(t, axis1=0, axis2=2)  # keep B
    return p, red


def _branch_outcome(p: float, red: np.ndarray) -> WeakOutcome:
    if p < NEGLIGIBLE_PROB:
        return WeakOutcome(probability=max(p, 0.0), conditional=validate_density(I2 / 2), negligible=True)
    return WeakOutcome(probability=p, conditional=validate_density(red / p))


def weak_outcomes(
    rho: DensityMatrix, pair: WeakMeasurementPair, side: Side
) -> tuple[WeakOutcome, WeakOutcome]:
    """Probabilities and conditional states for the P(x) / P(-x) branches."""
    if rho.dim != 4:
        raise BadDimError("weak measurement outcomes need a two-qubit state")
    px, pmx = weak_operators(pair)
    p_plus, red_plus = _traced_branch(rho, px, side)
    p_minus, red_minus = _traced_branch(rho, pmx, side)
    return _branch_outcome(p_plus, red_plus), _branch_outcome(p_minus, red_minus)


def projective_outcomes(
    rho: DensityMatrix, basis: MeasurementBasis, side: Side
) -> list[tuple[float, DensityMatrix]]:
    """Projective branches (p_k, post_k) with post_k still a two-qubit state.

    Branches with probability below ``NEGLIGIBLE_PROB`` are dropped; they
    contribute nothing to entropy averages.
    """
    if rho.dim != 4:
        raise BadDimError("projective outcomes need a two-qubit state")
    out = []
    for proj in basis.projectors():
        full = _embed(proj, side)
        post = full @ rho.matrix @ full
        p = float(np.trace(post).real)
        if p < NEGLIGIBLE_PROB:
            continue
        out.append((p, validate_density(post / p)))
    return out


def _ginibre(rng: np.random.Generator, n: int) -> np.ndarray:
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_density(seed: int, *, dim: int = 4) -> DensityMatrix:
    """Ginibre-random state: G G^dagger normalized, full rank almost surely."""
    if dim not in (2, 4):
        raise BadDimError(f"dim must be 2 or 4, got {dim}")
    rng = np.random.default_rng(seed)
    return validate_density(_ginibre(rng, dim))


def _haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_local_unitary(seed: int) -> tuple[np.ndarray, np.ndarray]:
    """A seeded pair of 2x2 Haar unitaries (QR with phase-fixed diagonal)."""
    rng = np.random.default_rng(seed)
    return _haar_unitary(rng, 2), _haar_unitary(rng, 2)


def apply_local_unitary(rho: DensityMatrix, u: np.ndarray, v: np.ndarray) -> DensityMatrix:
    """(U (x) V) rho (U (x) V)^dagger."""
    if rho.dim != 4:
        raise BadDimError("local rotation needs a two-qubit state")
    uv = linalg.kron(u, v)
    return validate_density(uv @ rho.matrix @ uv.conj().T)


# --- JSON state format shared with the CLI ---------------------------------
#
# {"dim": 4, "matrix": [[[re, im], ...], ...]}  (dim rows of dim [re, im] pairs)


def density_to_json(rho: DensityMatrix) -> dict:
    return {
        "dim": rho.dim,
        "matrix": [
            [[float(z.real), float(z.imag)] for z in row] for row in rho.matrix
        ],
    }


def density_from_json(obj) -> DensityMatrix:
    if not isinstance(obj, dict):
        raise ValueError("state JSON must be an object")
    if "dim" not in obj or "matrix" not in obj:
        raise ValueError('state JSON needs "dim" and "matrix" fields')
    dim = obj["dim"]
    if dim not in (2, 4):
        raise BadDimError(f'"dim" must be 2 or 4, got {dim!r}')
    rows = obj["matrix"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise ValueError(f'"matrix" must hold {dim} rows')
    m = np.zeros((dim, dim), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ValueError(f"matrix row {i} must hold {dim} entries")
        for j, ent in enumerate(row):
            if not isinstance(ent, list) or len(ent) != 2:
                raise ValueError(f"entry ({i},{j}) must be a [re, im] pair")
            m[i, j] = complex(float(ent[0]), float(ent[1]))
    return validate_density(m)


def load_density(path) -> DensityMatrix:
    with open(path, encoding="utf-8") as fh:
        return density_from_json(json.load(fh))


def save_density(rho: DensityMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(density_to_json(rho), fh, indent=2)
        fh.write("\n")
