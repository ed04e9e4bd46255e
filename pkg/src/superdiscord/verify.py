"""Seeded property suites for the `verify` command.

Each check draws its own deterministic corpus from the base seed, measures
the worst deviation it sees, and records the first counterexample (seed and
inputs) when it fails.  ``trials`` scales every corpus; at the reference
scale of 200 the counts match the acceptance suite.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import correlations, linalg, quantum, rra
from .quantum import MeasurementBasis, Side, WeakMeasurementPair


@dataclass
class CheckResult:
    name: str
    count: int
    worst: float
    limit: float
    passed: bool
    counterexample: str | None = None


class _Recorder:
    """Tracks the worst deviation and the first violating trial."""

    def __init__(self, name: str, limit: float):
        self.name = name
        self.limit = limit
        self.worst = -math.inf
        self.count = 0
        self.first_violation = None

    def record(self, value: float, context: str):
        self.count += 1
        if value > self.worst:
            self.worst = value
        if value > self.limit and self.first_violation is None:
            self.first_violation = f"{context}: deviation {value:.6g} > {self.limit:.6g}"

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name,
            count=self.count,
            worst=self.worst if self.count else 0.0,
            limit=self.limit,
            passed=self.first_violation is None,
            counterexample=self.first_violation,
        )


def _random_angles(rng) -> tuple[float, float]:
    return float(rng.uniform(0.0, math.pi / 2)), float(rng.uniform(0.0, 2 * math.pi))


def _random_strength(rng) -> float:
    return float(rng.choice([-1.0, 1.0]) * rng.uniform(0.05, 3.0))


def _product_state(seed: int) -> quantum.DensityMatrix:
    a = quantum.random_density(seed, dim=2)
    b = quantum.random_density(seed + 1, dim=2)
    return quantum.validate_density(linalg.kron(a.matrix, b.matrix))


def check_completeness(seed: int, n: int, limit: float = 1e-12) -> CheckResult:
    """P(x)^dag P(x) + P(-x)^dag P(-x) = I for random strengths and bases."""
    rec = _Recorder("eq8-completeness", limit)
    rng = np.random.default_rng(seed)
    for i in range(n):
        theta, phi = _random_angles(rng)
        x = _random_strength(rng)
        px, pmx = quantum.weak_operators(WeakMeasurementPair(x, MeasurementBasis(theta, phi)))
        dev = float(
            np.max(np.abs(px.conj().T @ px + pmx.conj().T @ pmx - np.eye(2)))
        )
        rec.record(dev, f"trial {i}: x={x:.6g} theta={theta:.6g} phi={phi:.6g}")
    return rec.result()


def check_probability_sum(seed: int, n: int, limit: float = 1e-12) -> CheckResult:
    """p(x) + p(-x) = 1 for random states, strengths, bases and sides."""
    rec = _Recorder("eq9-probability-sum", limit)
    rng = np.random.default_rng(seed)
    for i in range(n):
        state_seed = seed + 1000 + i
        rho = quantum.random_density(state_seed)
        theta, phi = _random_angles(rng)
        x = _random_strength(rng)
        side = Side.A if rng.integers(2) == 0 else Side.B
        plus, minus = quantum.weak_outcomes(
            rho, WeakMeasurementPair(x, MeasurementBasis(theta, phi)), side
        )
        dev = abs(plus.probability + minus.probability - 1.0)
        rec.record(
            dev,
            f"trial {i}: state_seed={state_seed} x={x:.6g} theta={theta:.6g} "
            f"phi={phi:.6g} side={side.value}",
        )
    return rec.result()


def check_swap_relabels_branches(seed: int, n: int) -> CheckResult:
    """Negating x (relabeling pi_0 <-> pi_1) swaps operators and branches bit-for-bit."""
    rec = _Recorder("swap-relabels-branches", 0.0)
    rng = np.random.default_rng(seed)
    for i in range(n):
        state_seed = seed + 2000 + i
        rho = quantum.random_density(state_seed)
        theta, phi = _random_angles(rng)
        x = float(rng.uniform(0.05, 3.0))
        side = Side.A if rng.integers(2) == 0 else Side.B
        basis = MeasurementBasis(theta, phi)
        px, pmx = quantum.weak_operators(WeakMeasurementPair(x, basis))
        qx, qmx = quantum.weak_operators(WeakMeasurementPair(-x, basis))
        ops_exact = np.array_equal(px, qmx) and np.array_equal(pmx, qx)
        p1, m1 = quantum.weak_outcomes(rho, WeakMeasurementPair(x, basis), side)
        p2, m2 = quantum.weak_outcomes(rho, WeakMeasurementPair(-x, basis), side)
        branches_exact = (
            p1.probability == m2.probability
            and m1.probability == p2.probability
            and np.array_equal(p1.conditional.matrix, m2.conditional.matrix)
            and np.array_equal(m1.conditional.matrix, p2.conditional.matrix)
        )
        dev = 0.0 if (ops_exact and branches_exact) else 1.0
        rec.record(dev, f"trial {i}: state_seed={state_seed} x={x:.6g} theta={theta:.6g}")
    return rec.result()


def check_product_partial_trace(seed: int, n: int, limit: float = 1e-12) -> CheckResult:
    """partial_trace(kron(a, b)) recovers each factor."""
    rec = _Recorder("product-partial-trace", limit)
    for i in range(n):
        s = seed + 3000 + 2 * i
        a = quantum.random_density(s, dim=2)
        b = quantum.random_density(s + 1, dim=2)
        prod = quantum.validate_density(linalg.kron(a.matrix, b.matrix))
        dev = max(
            linalg.frobenius_distance(quantum.partial_trace(prod, Side.A).matrix, a.matrix),
            linalg.frobenius_distance(quantum.partial_trace(prod, Side.B).matrix, b.matrix),
        )
        rec.record(dev, f"trial {i}: factor seeds {s}, {s + 1}")
    return rec.result()


def check_entropy_unitary_invariance(seed: int, n: int, limit: float = 1e-10) -> CheckResult:
    rec = _Recorder("entropy-unitary-invariance", limit)
    for i in range(n):
        s = seed + 4000 + i
        rho = quantum.random_density(s)
        u, v = quantum.random_local_unitary(s + 50_000)
        rotated = quantum.apply_local_unitary(rho, u, v)
        dev = abs(quantum.entropy(rotated) - quantum.entropy(rho))
        rec.record(dev, f"trial {i}: state_seed={s} unitary_seed={s + 50_000}")
    return rec.result()


def check_information_chain(seed: int, n: int) -> CheckResult:
    """I + 1e-4 >= D_w >= D - 2e-6 on random states, both sides, x in {0.5, 1, 2}."""
    rec = _Recorder("mutual-info-chain", 0.0)
    for i in range(n):
        s = seed + 5000 + i
        rho = quantum.random_density(s)
        i_val = correlations.mutual_information(rho)
        for side in (Side.A, Side.B):
            d_val = correlations.discord(rho, side)
            for x in (0.5, 1.0, 2.0):
                dw = correlations.super_discord(rho, x, side)[0]
                violation = max(dw - (i_val + 1e-4), (d_val - 2e-6) - dw)
                rec.record(
                    violation,
                    f"trial {i}: state_seed={s} side={side.value} x={x} "
                    f"I={i_val:.6g} D={d_val:.6g} Dw={dw:.6g}",
                )
    return rec.result()


def check_local_unitary_invariance(seed: int, n: int, limit: float = 1e-4) -> CheckResult:
    rec = _Recorder("super-discord-lu-invariance", limit)
    for i in range(n):
        s = seed + 6000 + i
        rho = quantum.random_density(s)
        u, v = quantum.random_local_unitary(s + 60_000)
        rotated = quantum.apply_local_unitary(rho, u, v)
        dw0 = correlations.super_discord(rho, 1.0, Side.B)[0]
        dw1 = correlations.super_discord(rotated, 1.0, Side.B)[0]
        rec.record(abs(dw1 - dw0), f"trial {i}: state_seed={s} unitary_seed={s + 60_000}")
    return rec.result()


def check_strong_limit(seed: int, n: int, limit: float = 1e-3) -> CheckResult:
    """x = 10 is effectively projective: D_w matches D."""
    rec = _Recorder("strong-measurement-limit", limit)
    for i in range(n):
        s = seed + 7000 + i
        rho = quantum.random_density(s)
        dev = abs(
            correlations.super_discord(rho, 10.0, Side.B)[0]
            - correlations.discord(rho, Side.B)
        )
        rec.record(dev, f"trial {i}: state_seed={s}")
    return rec.result()


def check_weak_limit(seed: int, n: int, limit: float = 5e-3) -> CheckResult:
    """x -> 0 leaves the state untouched: D_w approaches I."""
    rec = _Recorder("weak-measurement-limit", limit)
    for i in range(n):
        s = seed + 8000 + i
        rho = quantum.random_density(s)
        dev = abs(
            correlations.super_discord(rho, 1e-4, Side.B)[0]
            - correlations.mutual_information(rho)
        )
        rec.record(dev, f"trial {i}: state_seed={s}")
    return rec.result()


def check_vanishing_side_independence(seed: int, n_random: int, n_product: int) -> CheckResult:
    """D_w vanishes on one side iff it vanishes on the other."""
    rec = _Recorder("vanishing-side-independence", 0.0)
    states = [(f"ginibre seed={seed + 9000 + i}", quantum.random_density(seed + 9000 + i)) for i in range(n_random)]
    states += [
        (f"product seed={seed + 9500 + 2 * i}", _product_state(seed + 9500 + 2 * i))
        for i in range(n_product)
    ]
    for label, rho in states:
        zero_a = correlations.super_discord(rho, 1.0, Side.A)[0] <= 1e-6
        zero_b = correlations.super_discord(rho, 1.0, Side.B)[0] <= 1e-6
        rec.record(0.0 if zero_a == zero_b else 1.0, label)
    return rec.result()


def check_strength_sign_symmetry(seed: int, n: int) -> CheckResult:
    """D_w is invariant under x <-> -x, bit for bit."""
    rec = _Recorder("strength-sign-symmetry", 0.0)
    for i in range(n):
        s = seed + 10_000 + i
        rho = quantum.random_density(s)
        a = correlations.super_discord(rho, 1.3, Side.B)[0]
        b = correlations.super_discord(rho, -1.3, Side.B)[0]
        rec.record(0.0 if a == b else abs(a - b), f"trial {i}: state_seed={s}")
    return rec.result()


def check_rra_state_equivalence(n: int, limit: float = 1e-12) -> CheckResult:
    """Equal priors with equal real overlaps reproduce the optimal family."""
    rec = _Recorder("rra-state-equivalence", limit)
    for i, c in enumerate(np.linspace(0.01, 0.99, n)):
        built = rra.general_state(rra.RRAParams(0.5, complex(c), complex(c)))
        direct = rra.optimal_state(float(c))
        rec.record(
            linalg.frobenius_distance(built.matrix, direct.matrix), f"c={float(c):.6g}"
        )
    return rec.result()


def check_rra_analytic_match(
    grid: int, lam_limit: float = 1e-10, p_limit: float = 1e-12
) -> tuple[CheckResult, CheckResult]:
    """Closed-form p(x) and conditional spectrum vs the measurement pipeline."""
    rec_lam = _Recorder("rra-lambda-vs-eigensolver", lam_limit)
    rec_p = _Recorder("rra-probability-vs-pipeline", p_limit)
    for c in np.linspace(0.0, 1.0, grid):
        rho = rra.optimal_state(float(c))
        for x in np.linspace(0.1, 2.5, grid):
            for theta in np.linspace(0.0, math.pi / 2, grid):
                ctx = f"c={float(c):.6g} x={float(x):.6g} theta={float(theta):.6g}"
                pair = WeakMeasurementPair(float(x), MeasurementBasis(float(theta), 0.0))
                plus, minus = quantum.weak_outcomes(rho, pair, Side.A)
                rec_p.record(
                    abs(plus.probability - rra.outcome_probability(float(c), float(x), float(theta))),
                    ctx,
                )
                for outcome, strength in ((plus, float(x)), (minus, -float(x))):
                    lam_hi, lam_lo = rra.conditional_eigenvalues(float(c), strength, float(theta))
                    evs = outcome.conditional.eigenvalues
                    dev = max(abs(evs[1] - lam_hi), abs(evs[0] - lam_lo))
                    rec_lam.record(dev, ctx + f" branch x={strength:.6g}")
    return rec_lam.result(), rec_p.result()


def check_rra_entropy_reduction(n: int, limit: float = 1e-10) -> CheckResult:
    """S(joint) equals S(system marginal) across the optimal family."""
    rec = _Recorder("rra-joint-entropy-equals-marginal", limit)
    for c in np.linspace(0.0, 1.0, n):
        rho = rra.optimal_state(float(c))
        dev = abs(
            quantum.entropy(rho) - quantum.entropy(quantum.partial_trace(rho, Side.A))
        )
        rec.record(dev, f"c={float(c):.6g}")
    return rec.result()


def check_rra_discord_structure() -> tuple[CheckResult, CheckResult]:
    """Left discord vanishes while right discord stays present at mid overlap."""
    rec_left = _Recorder("rra-left-discord-zero", 1e-6)
    rec_right = _Recorder("rra-right-discord-present", 0.0)
    for c in (0.2, 0.35, 0.5, 0.65, 0.8):
        rho = rra.optimal_state(c)
        rec_left.record(correlations.discord(rho, Side.A), f"c={c}")
        rec_right.record(1e-3 - correlations.discord(rho, Side.B), f"c={c}")
    return rec_left.result(), rec_right.result()


def check_rra_super_discord_positive() -> CheckResult:
    """Super discord stays strictly positive away from the boundary overlaps."""
    rec = _Recorder("rra-super-discord-positive", 0.0)
    for c in (0.2, 0.35, 0.5, 0.65, 0.8):
        for x in (0.5, 1.0, 2.0):
            value = rra.super_discord(c, x)[0]
            rec.record(1e-6 - value, f"c={c} x={x} value={value:.6g}")
    return rec.result()


def run_suites(seed: int, trials: int, corrupt: bool = False) -> list[CheckResult]:
    """Run every property suite scaled to ``trials`` (reference scale 200)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n5 = 5 * trials
    n_quarter = max(1, trials // 4)
    n_tenth = max(1, trials // 10)
    grid = max(3, min(20, round(20 * trials / 200)))

    results = [
        check_completeness(seed, n5, limit=1e-30 if corrupt else 1e-12),
        check_probability_sum(seed, n5),
        check_swap_relabels_branches(seed, trials),
        check_product_partial_trace(seed, trials),
        check_entropy_unitary_invariance(seed, trials),
        check_information_chain(seed, trials),
        check_local_unitary_invariance(seed, n_quarter),
        check_strong_limit(seed, n_tenth),
        check_weak_limit(seed, n_tenth),
        check_vanishing_side_independence(seed, n_tenth, max(1, trials // 20)),
        check_strength_sign_symmetry(seed, max(1, trials // 8)),
        check_rra_state_equivalence(max(2, min(50, trials // 4))),
        *check_rra_analytic_match(grid),
        check_rra_entropy_reduction(max(2, min(50, trials // 4))),
        *check_rra_discord_structure(),
        check_rra_super_discord_positive(),
    ]
    return results
