import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

SQRT3 = np.sqrt(3.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_complex(rng, size, lo=-5.0, hi=5.0):
    return rng.uniform(lo, hi, size) + 1j * rng.uniform(lo, hi, size)


@pytest.fixture
def rho_sixths():
    """Density matrix with populations 1/6, 1/3, 1/2."""
    k = 1 / (6 * SQRT3)
    return k * np.array(
        [[2 * SQRT3, -1, -1j], [-1, 2 * SQRT3, -1], [1j, -1, 2 * SQRT3]], dtype=complex
    )


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
