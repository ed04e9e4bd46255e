import math

import numpy as np
import pytest

from superdiscord import correlations, linalg, quantum, rra
from superdiscord.errors import BadParamsError, ZeroStrengthError
from superdiscord.quantum import MeasurementBasis, Side, WeakMeasurementPair


class TestGeneralState:
    def test_zero_overlap_is_product(self):
        rho = rra.general_state(rra.RRAParams(0.3, 0j, 0j))
        plus = 0.5 * np.array([[1, 1], [1, 1]], dtype=complex)
        minus = 0.5 * np.array([[1, -1], [-1, 1]], dtype=complex)
        expected = linalg.kron(0.3 * plus + 0.7 * minus, np.diag([1.0, 0.0]))
        assert linalg.frobenius_distance(rho.matrix, expected) <= 1e-12
        assert correlations.is_product(rho, 1e-10)

    def test_unit_overlap_is_pure_product(self):
        rho = rra.general_state(rra.RRAParams(0.5, 1.0 + 0j, 1j))
        expected = linalg.kron(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
        assert linalg.frobenius_distance(rho.matrix, expected) <= 1e-12

    @pytest.mark.parametrize("c", np.linspace(0.0, 1.0, 17))
    def test_equal_real_overlaps_reduce_to_optimal_family(self, c):
        built = rra.general_state(rra.RRAParams(0.5, complex(c), complex(c)))
        assert linalg.frobenius_distance(built.matrix, rra.optimal_state(float(c)).matrix) <= 1e-12

    def test_complex_amplitudes_accepted(self):
        rho = rra.general_state(rra.RRAParams(0.4, 0.3 + 0.4j, 0.2 - 0.1j))
        assert rho.dim == 4

    @pytest.mark.parametrize(
        "p,ap,am",
        [(0.0, 0j, 0j), (1.0, 0j, 0j), (0.5, 1.2, 0j), (0.5, 0j, 1.0001j)],
    )
    def test_bad_params_rejected(self, p, ap, am):
        with pytest.raises(BadParamsError):
            rra.RRAParams(p, ap, am)


class TestOptimalState:
    def test_boundaries(self):
        lo = rra.optimal_state(0.0)
        assert linalg.frobenius_distance(
            lo.matrix, linalg.kron(np.eye(2) / 2, np.diag([1.0, 0.0]))
        ) <= 1e-15
        hi = rra.optimal_state(1.0)
        assert linalg.frobenius_distance(
            hi.matrix, linalg.kron(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
        ) <= 1e-15

    @pytest.mark.parametrize("c", [0.2, 0.6, 0.95])
    def test_spectrum(self, c):
        rho = rra.optimal_state(c)
        expected = [0.0, 0.0, (1 - c * c) / 2, (1 + c * c) / 2]
        assert np.allclose(rho.eigenvalues, expected, atol=1e-12)

    def test_joint_entropy_equals_system_marginal(self):
        for c in np.linspace(0.0, 1.0, 21):
            rho = rra.optimal_state(float(c))
            dev = abs(quantum.entropy(rho) - quantum.entropy(quantum.partial_trace(rho, Side.A)))
            assert dev <= 1e-10

    def test_out_of_range_rejected(self):
        for c in (-0.01, 1.01):
            with pytest.raises(BadParamsError):
                rra.optimal_state(c)


class TestOutcomeProbability:
    def test_balanced_angle(self):
        for c in (0.0, 0.5, 1.0):
            for x in (0.3, 2.0):
                assert abs(rra.outcome_probability(c, x, math.pi / 4) - 0.5) <= 1e-15

    def test_zero_overlap(self):
        assert rra.outcome_probability(0.0, 1.0, 0.2) == 0.5

    def test_pair_sums_to_exactly_one(self):
        for c in np.linspace(0.0, 1.0, 13):
            for x in (0.05, 0.7, 1.9, 3.4):
                for theta in np.linspace(0.0, math.pi / 2, 11):
                    p = rra.outcome_probability(float(c), x, float(theta))
                    q = rra.outcome_probability(float(c), -x, float(theta))
                    assert p + q == 1.0

    def test_matches_measurement_pipeline(self):
        for c in np.linspace(0.05, 0.95, 7):
            rho = rra.optimal_state(float(c))
            for x in (0.4, 1.3):
                for theta in np.linspace(0.0, math.pi / 2, 7):
                    pair = WeakMeasurementPair(x, MeasurementBasis(float(theta), 0.0))
                    plus, _ = quantum.weak_outcomes(rho, pair, Side.A)
                    assert abs(plus.probability - rra.outcome_probability(float(c), x, float(theta))) <= 1e-12

    def test_zero_strength_rejected(self):
        with pytest.raises(ZeroStrengthError):
            rra.outcome_probability(0.5, 0.0, 0.3)


class TestConditionalEigenvalues:
    def test_balanced_angle_closed_form(self):
        for c in (0.2, 0.6, 0.9):
            root = math.sqrt(1 - 2 * c**2 + 2 * c**4)
            hi, lo = rra.conditional_eigenvalues(c, 1.0, math.pi / 4)
            assert abs(hi - (1 + root) / 2) <= 1e-12
            assert abs(lo - (1 - root) / 2) <= 1e-12

    def test_unit_overlap_degenerate(self):
        for theta in (0.0, 0.5, 1.2):
            for x in (0.3, 5.0):
                assert rra.conditional_eigenvalues(1.0, x, theta) == (1.0, 0.0)

    def test_pair_sums_to_exactly_one(self):
        for c in np.linspace(0.0, 1.0, 9):
            for x in (0.2, 1.1, -2.3):
                for theta in np.linspace(0.0, math.pi / 2, 9):
                    hi, lo = rra.conditional_eigenvalues(float(c), x, float(theta))
                    assert hi + lo == 1.0
                    assert 0.0 <= lo <= hi <= 1.0

    def test_matches_eigensolver(self):
        # guard against transcription errors in the closed form
        for c in np.linspace(0.0, 1.0, 8):
            rho = rra.optimal_state(float(c))
            for x in (0.3, 1.0, 2.2):
                for theta in np.linspace(0.0, math.pi / 2, 8):
                    pair = WeakMeasurementPair(x, MeasurementBasis(float(theta), 0.0))
                    plus, minus = quantum.weak_outcomes(rho, pair, Side.A)
                    for outcome, strength in ((plus, x), (minus, -x)):
                        hi, lo = rra.conditional_eigenvalues(float(c), strength, float(theta))
                        evs = outcome.conditional.eigenvalues
                        assert abs(evs[1] - hi) <= 1e-10
                        assert abs(evs[0] - lo) <= 1e-10


class TestWeakConditionalEntropy:
    def test_boundary_overlaps_vanish(self):
        for c in (0.0, 1.0):
            for theta in (0.0, 0.8, math.pi / 2):
                assert rra.weak_conditional_entropy(c, 1.0, theta) == 0.0

    def test_agrees_with_generic_pipeline(self):
        for c in (0.25, 0.6, 0.85):
            rho = rra.optimal_state(c)
            for x in (0.4, 1.0, 2.1):
                for theta in (0.0, 0.5, math.pi / 4, 1.3):
                    pair = WeakMeasurementPair(x, MeasurementBasis(theta, 0.0))
                    generic = correlations.weak_conditional_entropy(rho, pair, Side.A)
                    assert abs(rra.weak_conditional_entropy(c, x, theta) - generic) <= 1e-10

    def test_balanced_angle_frozen_value(self):
        # radicand 1 - 2 c^2 + 2 c^4 = 0.5392 at c = 0.6
        root = math.sqrt(0.5392)
        lam_hi, lam_lo = (1 + root) / 2, (1 - root) / 2
        expected = -(lam_hi * math.log2(lam_hi) + lam_lo * math.log2(lam_lo))
        assert abs(rra.weak_conditional_entropy(0.6, 1.0, math.pi / 4) - expected) <= 1e-12


class TestSuperDiscord:
    def test_boundaries_vanish(self):
        for x in (0.5, 1.0, 2.0):
            assert rra.super_discord(0.0, x)[0] <= 1e-6
            assert rra.super_discord(1.0, x)[0] <= 1e-6

    def test_positive_in_the_interior(self):
        for c in (0.2, 0.5, 0.8):
            for x in (0.5, 1.0, 2.0):
                assert rra.super_discord(c, x)[0] > 1e-3

    def test_decreasing_in_strength(self):
        values = [rra.super_discord(0.5, x)[0] for x in np.arange(0.2, 2.01, 0.2)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_matches_generic_two_parameter_pipeline(self):
        for c in (0.15, 0.45, 0.75):
            for x in (0.5, 1.5):
                analytic = rra.super_discord(c, x)[0]
                generic = correlations.super_discord(rra.optimal_state(c), x, Side.A)[0]
                assert abs(analytic - generic) <= 1e-5

    def test_zero_strength_rejected(self):
        with pytest.raises(ZeroStrengthError):
            rra.super_discord(0.5, 0.0)


class TestSweep:
    def test_boundary_grid(self):
        records = rra.sweep([0.0, 1.0], [1.0])
        assert len(records) == 2
        assert all(r.super_discord <= 1e-6 for r in records)

    def test_row_major_ordering(self):
        records = rra.sweep([0.2, 0.4], [0.5, 1.0, 1.5])
        assert [(r.c, r.x) for r in records] == [
            (0.2, 0.5), (0.2, 1.0), (0.2, 1.5),
            (0.4, 0.5), (0.4, 1.0), (0.4, 1.5),
        ]

    def test_matches_generic_pipeline(self):
        records = rra.sweep([0.3, 0.7], [0.6, 1.8])
        for rec in records:
            generic = correlations.super_discord(rra.optimal_state(rec.c), rec.x, Side.A)[0]
            assert abs(rec.super_discord - generic) <= 1e-5

    def test_rejects_zero_strength(self):
        with pytest.raises(ZeroStrengthError):
            rra.sweep([0.5], [0.0, 1.0])

    def test_rejects_empty_grid(self):
        with pytest.raises(BadParamsError):
            rra.sweep([], [1.0])

    def test_csv_format(self, tmp_path):
        records = rra.sweep([0.0, 0.5], [0.5, 1.0])
        path = tmp_path / "sweep.csv"
        rra.write_sweep_csv(records, path)
        text = path.read_text(encoding="utf-8")
        assert text.endswith("\n")
        lines = text.splitlines()
        assert lines[0] == "c,x,theta_opt,super_discord"
        assert len(lines) == 5
        for line, rec in zip(lines[1:], records):
            c, x, theta, dw = (float(tok) for tok in line.split(","))
            assert (c, x) == (rec.c, rec.x)
            assert abs(dw - rec.super_discord) <= 1e-11  # 12 significant digits
