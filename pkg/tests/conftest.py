import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import _oracle


@pytest.fixture(scope="session")
def irreducibles10():
    """All irreducible bitmasks of degree <= 10, from the trial-division sieve."""
    return _oracle.irreducibles_upto(10)


@pytest.fixture
def rng():
    return random.Random(20240811)
