"""Exception types raised by the library."""


class ShapeMismatchError(ValueError):
    """Operands have incompatible shapes."""


class NotHermitianError(ValueError):
    """Matrix deviates from its adjoint beyond tolerance."""


class NoConvergenceError(RuntimeError):
    """Eigensolver hit its sweep cap before the off-diagonal threshold."""


class BadDimError(ValueError):
    """Matrix dimension is not one of the supported qubit dimensions."""


class TraceNotOneError(ValueError):
    """Trace differs from one beyond tolerance."""


class NotPositiveError(ValueError):
    """Spectrum has an eigenvalue below the negativity tolerance."""


class ZeroStrengthError(ValueError):
    """Weak-measurement strength is exactly zero."""


class NonFiniteStrengthError(ValueError):
    """Weak-measurement strength is NaN or infinite."""


class NonFiniteObjectiveError(ValueError):
    """Objective returned NaN or infinity during basis optimization."""


class BadParamsError(ValueError):
    """State-discrimination parameters outside their admissible ranges."""


class InconsistentVerdictError(RuntimeError):
    """The seven equivalence predicates disagreed beyond thresholds."""
