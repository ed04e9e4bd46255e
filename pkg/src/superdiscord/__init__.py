"""Super quantum discord for two-qubit states.

Weak-measurement correlation measures (mutual information, classical
correlation, discord, super discord), numerical verification of the
equivalence between vanishing super discord and being a product state, and
the super-discord surface of optimal assisted state discrimination.
"""

from ._backend import BACKEND
from .correlations import (
    CorrelationReport,
    TheoremVerdict,
    classical_correlation,
    compute_report,
    discord,
    is_product,
    mutual_information,
    optimize_over_bases,
    super_discord,
    theorem_report,
    weak_conditional_entropy,
)
from .quantum import (
    DensityMatrix,
    MeasurementBasis,
    Side,
    WeakMeasurementPair,
    WeakOutcome,
    entropy,
    partial_trace,
    projective_outcomes,
    random_density,
    random_local_unitary,
    validate_density,
    weak_operators,
    weak_outcomes,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CorrelationReport",
    "DensityMatrix",
    "MeasurementBasis",
    "Side",
    "TheoremVerdict",
    "WeakMeasurementPair",
    "WeakOutcome",
    "classical_correlation",
    "compute_report",
    "discord",
    "entropy",
    "is_product",
    "mutual_information",
    "optimize_over_bases",
    "partial_trace",
    "projective_outcomes",
    "random_density",
    "random_local_unitary",
    "super_discord",
    "theorem_report",
    "validate_density",
    "weak_conditional_entropy",
    "weak_operators",
    "weak_outcomes",
]
