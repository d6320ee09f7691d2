import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from ewlgames import GameDefinition, SteppingParams, build_grid


@pytest.fixture(scope="session")
def coarse_grid():
    """The 8-strategy grid (steps pi, pi/2, pi/2) most tests run on."""
    return build_grid(SteppingParams(math.pi, math.pi / 2, math.pi / 2))


@pytest.fixture(scope="session")
def prisoners_dilemma():
    return GameDefinition("prisoners_dilemma", (3, 0, 5, 1), (3, 5, 0, 1))


@pytest.fixture(scope="session")
def deadlock():
    return GameDefinition("deadlock", (1, 0, 3, 2), (1, 3, 0, 2))


@pytest.fixture(scope="session")
def stag_hunt():
    return GameDefinition("stag_hunt", (4, 0, 3, 2), (4, 3, 0, 2))


@pytest.fixture(scope="session")
def matching_pennies():
    return GameDefinition("matching_pennies", (1, -1, -1, 1), (-1, 1, 1, -1))
