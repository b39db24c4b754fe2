import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symtomo import states  # noqa: E402
from symtomo.core import Grid1D  # noqa: E402


@pytest.fixture(scope="session")
def psi_grid():
    return Grid1D(-10.0, 10.0, 2001)


@pytest.fixture(scope="session")
def ground():
    return states.ground()


@pytest.fixture(scope="session")
def excited():
    return states.excited1()


@pytest.fixture(scope="session")
def ground_psi(ground, psi_grid):
    return ground.wavefunction(psi_grid)


@pytest.fixture(scope="session")
def excited_psi(excited, psi_grid):
    return excited.wavefunction(psi_grid)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
