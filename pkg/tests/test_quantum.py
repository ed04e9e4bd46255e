import json
import math

import numpy as np
import pytest

from superdiscord import linalg, quantum
from superdiscord.errors import (
    BadDimError,
    NonFiniteStrengthError,
    NotHermitianError,
    NotPositiveError,
    TraceNotOneError,
    ZeroStrengthError,
)
from superdiscord.quantum import MeasurementBasis, Side, WeakMeasurementPair

from conftest import make_product


def rho_c_matrix(c: float) -> np.ndarray:
    k = c * math.sqrt(1 - c * c) / math.sqrt(2)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[2, 2] = (1 - c * c) / 2
    m[1, 1] = c * c
    m[0, 1] = m[1, 0] = k
    return m


class TestValidateDensity:
    def test_maximally_mixed_ok(self):
        rho = quantum.validate_density(np.eye(4) / 4)
        assert rho.dim == 4
        assert np.allclose(rho.eigenvalues, 0.25)

    def test_negative_eigenvalue_rejected(self):
        with pytest.raises(NotPositiveError):
            quantum.validate_density(np.diag([0.5, 0.6, 0.0, -0.1]))

    def test_trace_rejected(self):
        with pytest.raises(TraceNotOneError):
            quantum.validate_density(np.eye(4) / 3)

    def test_non_hermitian_rejected(self):
        m = np.eye(4, dtype=complex) / 4
        m[0, 1] = 1e-3
        with pytest.raises(NotHermitianError):
            quantum.validate_density(m)

    def test_bad_dim_rejected(self):
        with pytest.raises(BadDimError):
            quantum.validate_density(np.eye(3) / 3)

    def test_rank_two_family_spectrum(self):
        rho = quantum.validate_density(rho_c_matrix(0.6))
        assert np.allclose(rho.eigenvalues, [0.0, 0.0, 0.32, 0.68], atol=1e-12)

    def test_matrix_is_read_only(self):
        rho = quantum.validate_density(np.eye(4) / 4)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 1.0


class TestPartialTrace:
    def test_product_recovers_factors(self):
        a = quantum.random_density(21, dim=2)
        b = quantum.random_density(22, dim=2)
        prod = quantum.validate_density(linalg.kron(a.matrix, b.matrix))
        assert linalg.frobenius_distance(
            quantum.partial_trace(prod, Side.A).matrix, a.matrix
        ) <= 1e-12
        assert linalg.frobenius_distance(
            quantum.partial_trace(prod, Side.B).matrix, b.matrix
        ) <= 1e-12

    def test_bell_marginal_is_maximally_mixed(self, bell):
        red = quantum.partial_trace(bell, Side.A)
        assert linalg.frobenius_distance(red.matrix, np.eye(2) / 2) <= 1e-12

    def test_rank_two_family_ancilla_marginal(self):
        c = 0.6
        rho = quantum.validate_density(rho_c_matrix(c))
        expected = np.array(
            [[0.64, c * math.sqrt(1 - c * c) / math.sqrt(2)], [c * math.sqrt(1 - c * c) / math.sqrt(2), 0.36]]
        )
        assert linalg.frobenius_distance(
            quantum.partial_trace(rho, Side.B).matrix, expected
        ) <= 1e-12

    def test_needs_two_qubits(self):
        with pytest.raises(BadDimError):
            quantum.partial_trace(quantum.random_density(5, dim=2), Side.A)


class TestEntropy:
    def test_pure_state_zero(self):
        ket = np.zeros(4)
        ket[0] = 1.0
        rho = quantum.validate_density(np.outer(ket, ket))
        assert quantum.entropy(rho) == 0.0

    def test_maximally_mixed_two_bits(self, maximally_mixed):
        assert abs(quantum.entropy(maximally_mixed) - 2.0) <= 1e-12

    def test_rank_two_family_value(self):
        rho = quantum.validate_density(rho_c_matrix(0.6))
        expected = -(0.68 * math.log2(0.68) + 0.32 * math.log2(0.32))
        assert abs(quantum.entropy(rho) - expected) <= 1e-12


class TestMeasurementBasis:
    @pytest.mark.parametrize(
        "theta,phi", [(0.0, 0.0), (0.3, 1.0), (math.pi / 4, 4.2), (math.pi / 2, 6.1)]
    )
    def test_projector_pair(self, theta, phi):
        pi0, pi1 = MeasurementBasis(theta, phi).projectors()
        assert np.max(np.abs(pi0 @ pi1)) <= 1e-12
        assert np.max(np.abs(pi0 + pi1 - np.eye(2))) <= 1e-12
        assert np.max(np.abs(pi0 @ pi0 - pi0)) <= 1e-12

    def test_chart_is_validated(self):
        with pytest.raises(ValueError):
            MeasurementBasis(-0.1, 0.0)
        with pytest.raises(ValueError):
            MeasurementBasis(2.0, 0.0)
        with pytest.raises(ValueError):
            MeasurementBasis(0.3, 2 * math.pi)


class TestWeakOperators:
    def test_strong_limit_recovers_projectors(self):
        # tanh(40) rounds to exactly 1, so P(x) collapses onto pi_1
        basis = MeasurementBasis(0.4, 1.2)
        pi0, pi1 = basis.projectors()
        px, pmx = quantum.weak_operators(WeakMeasurementPair(40.0, basis))
        assert np.array_equal(px, pi1)
        assert np.array_equal(pmx, pi0)

    def test_computational_basis_values(self):
        px, pmx = quantum.weak_operators(WeakMeasurementPair(1.0, MeasurementBasis(0.0, 0.0)))
        lo = math.sqrt((1 - math.tanh(1.0)) / 2)
        hi = math.sqrt((1 + math.tanh(1.0)) / 2)
        assert np.allclose(px, np.diag([lo, hi]), atol=0)
        assert np.allclose(pmx, np.diag([hi, lo]), atol=0)

    def test_completeness(self):
        rng = np.random.default_rng(23)
        for _ in range(200):
            basis = MeasurementBasis(rng.uniform(0, math.pi / 2), rng.uniform(0, 2 * math.pi))
            x = float(rng.choice([-1, 1]) * rng.uniform(1e-3, 4))
            px, pmx = quantum.weak_operators(WeakMeasurementPair(x, basis))
            dev = np.max(np.abs(px.conj().T @ px + pmx.conj().T @ pmx - np.eye(2)))
            assert dev <= 1e-12

    def test_swapped_projectors_negate_strength(self):
        basis = MeasurementBasis(0.7, 2.2)
        pi0, pi1 = basis.projectors()
        px, pmx = quantum.weak_operators_from_projectors(pi0, pi1, 0.9)
        sx, smx = quantum.weak_operators_from_projectors(pi1, pi0, 0.9)
        assert np.array_equal(sx, pmx)
        assert np.array_equal(smx, px)

    def test_zero_strength_rejected(self):
        with pytest.raises(ZeroStrengthError):
            WeakMeasurementPair(0.0, MeasurementBasis(0.1, 0.1))

    def test_non_finite_strength_rejected(self):
        for bad in (math.nan, math.inf, -math.inf):
            with pytest.raises(NonFiniteStrengthError):
                WeakMeasurementPair(bad, MeasurementBasis(0.1, 0.1))

    def test_tiny_strength_accepted(self):
        pair = WeakMeasurementPair(1e-12, MeasurementBasis(0.1, 0.1))
        px, pmx = quantum.weak_operators(pair)
        assert np.max(np.abs(px.conj().T @ px + pmx.conj().T @ pmx - np.eye(2))) <= 1e-12


class TestWeakOutcomes:
    def test_product_state_conditionals_are_marginal(self):
        prod = make_product(31)
        marg = quantum.partial_trace(prod, Side.A)
        pair = WeakMeasurementPair(0.8, MeasurementBasis(0.5, 1.1))
        plus, minus = quantum.weak_outcomes(prod, pair, Side.B)
        assert abs(plus.probability + minus.probability - 1.0) <= 1e-12
        for out in (plus, minus):
            assert linalg.frobenius_distance(out.conditional.matrix, marg.matrix) <= 1e-12

    @pytest.mark.parametrize("c", [0.25, 0.6, 0.9])
    @pytest.mark.parametrize("x", [0.3, 1.0, 2.5])
    def test_rank_two_family_probability_formula(self, c, x):
        rho = quantum.validate_density(rho_c_matrix(c))
        for theta in (0.0, 0.4, math.pi / 4, 1.3):
            pair = WeakMeasurementPair(x, MeasurementBasis(theta, 0.7))
            plus, _ = quantum.weak_outcomes(rho, pair, Side.A)
            expected = 0.5 * (1 - math.tanh(x) * math.cos(2 * theta) * c * c)
            assert abs(plus.probability - expected) <= 1e-12

    def test_balanced_at_diagonal_angle(self):
        rho = quantum.validate_density(rho_c_matrix(0.7))
        pair = WeakMeasurementPair(1.4, MeasurementBasis(math.pi / 4, 0.0))
        plus, minus = quantum.weak_outcomes(rho, pair, Side.A)
        assert abs(plus.probability - 0.5) <= 1e-12
        assert abs(minus.probability - 0.5) <= 1e-12

    def test_negligible_branch_flagged(self):
        # A-side |0><0| factor plus a projective-strength measurement kills
        # the pi_1 branch entirely.
        b = quantum.random_density(33, dim=2)
        ket0 = np.diag([1.0, 0.0])
        rho = quantum.validate_density(linalg.kron(ket0, b.matrix))
        pair = WeakMeasurementPair(40.0, MeasurementBasis(0.0, 0.0))
        plus, minus = quantum.weak_outcomes(rho, pair, Side.A)
        # P(x) = pi_1 at this strength, so the plus branch is the dead one
        assert plus.negligible
        assert plus.probability <= 1e-14
        assert linalg.frobenius_distance(plus.conditional.matrix, np.eye(2) / 2) == 0.0
        assert not minus.negligible
        assert abs(minus.probability - 1.0) <= 1e-12


class TestProjectiveOutcomes:
    def test_maximally_mixed(self, maximally_mixed):
        basis = MeasurementBasis(0.3, 0.9)
        branches = quantum.projective_outcomes(maximally_mixed, basis, Side.B)
        assert len(branches) == 2
        for (p, post), proj in zip(branches, basis.projectors()):
            assert abs(p - 0.5) <= 1e-12
            expected = linalg.kron(np.eye(2) / 2, proj)
            assert linalg.frobenius_distance(post.matrix, expected) <= 1e-12

    def test_bell_schmidt_branches(self, bell):
        branches = quantum.projective_outcomes(bell, MeasurementBasis(0.0, 0.0), Side.B)
        for k, (p, post) in enumerate(branches):
            assert abs(p - 0.5) <= 1e-12
            ket = np.zeros(4)
            ket[3 * k] = 1.0  # |00> then |11>
            assert linalg.frobenius_distance(post.matrix, np.outer(ket, ket)) <= 1e-12

    def test_rank_two_family_top_branch(self):
        rho = quantum.validate_density(rho_c_matrix(0.6))
        branches = quantum.projective_outcomes(rho, MeasurementBasis(0.0, 0.0), Side.A)
        assert abs(branches[0][0] - 0.68) <= 1e-12

    def test_probabilities_sum_to_one(self):
        rng = np.random.default_rng(35)
        for i in range(20):
            rho = quantum.random_density(400 + i)
            basis = MeasurementBasis(rng.uniform(0, math.pi / 2), rng.uniform(0, 2 * math.pi))
            side = Side.A if rng.integers(2) == 0 else Side.B
            total = sum(p for p, _ in quantum.projective_outcomes(rho, basis, side))
            assert abs(total - 1.0) <= 1e-12


class TestRandomGeneration:
    def test_density_deterministic(self):
        a = quantum.random_density(123)
        b = quantum.random_density(123)
        assert np.array_equal(a.matrix, b.matrix)

    def test_density_not_product(self):
        t = quantum.partial_trace
        for i in range(100):
            rho = quantum.random_density(1000 + i)
            prod = linalg.kron(t(rho, Side.A).matrix, t(rho, Side.B).matrix)
            assert linalg.frobenius_distance(rho.matrix, prod) > 1e-3

    def test_unitary_pair(self):
        u, v = quantum.random_local_unitary(7)
        u2, v2 = quantum.random_local_unitary(7)
        assert np.array_equal(u, u2) and np.array_equal(v, v2)
        for w in (u, v):
            assert np.max(np.abs(w.conj().T @ w - np.eye(2))) <= 1e-12

    def test_entropy_invariant_under_rotation(self):
        for i in range(20):
            rho = quantum.random_density(2000 + i)
            u, v = quantum.random_local_unitary(3000 + i)
            rotated = quantum.apply_local_unitary(rho, u, v)
            assert abs(quantum.entropy(rotated) - quantum.entropy(rho)) <= 1e-10


class TestJsonFormat:
    def test_round_trip(self, tmp_path):
        rho = quantum.random_density(55)
        path = tmp_path / "state.json"
        quantum.save_density(rho, path)
        back = quantum.load_density(path)
        assert np.array_equal(back.matrix, rho.matrix)

    def test_schema_shape(self):
        obj = quantum.density_to_json(quantum.random_density(56))
        assert obj["dim"] == 4
        assert len(obj["matrix"]) == 4
        assert all(len(row) == 4 for row in obj["matrix"])
        assert all(len(ent) == 2 for row in obj["matrix"] for ent in row)
        json.dumps(obj)  # serializable

    @pytest.mark.parametrize(
        "obj",
        [
            [],
            {},
            {"dim": 3, "matrix": []},
            {"dim": 2, "matrix": [[[1, 0], [0, 0]]]},
            {"dim": 2, "matrix": [[[0.5, 0]], [[0.5, 0]]]},
            {"dim": 2, "matrix": [[[0.5, 0], [0, 0]], [[0, 0], "x"]]},
        ],
    )
    def test_malformed_rejected(self, obj):
        with pytest.raises(ValueError):
            quantum.density_from_json(obj)
