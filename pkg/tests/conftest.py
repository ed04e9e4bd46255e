import numpy as np
import pytest

from superdiscord import linalg, quantum


@pytest.fixture
def bell():
    """|Phi+><Phi+| = (|00> + |11>)(<00| + <11|) / 2."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[0, 3] = m[3, 0] = m[3, 3] = 0.5
    return quantum.validate_density(m)


@pytest.fixture
def maximally_mixed():
    return quantum.validate_density(np.eye(4) / 4)


def make_product(seed: int) -> quantum.DensityMatrix:
    a = quantum.random_density(seed, dim=2)
    b = quantum.random_density(seed + 1, dim=2)
    return quantum.validate_density(linalg.kron(a.matrix, b.matrix))


@pytest.fixture
def product_state():
    return make_product(11)
