import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from selberg_lab import balanced_window


@pytest.fixture(scope="session")
def balanced_1e5():
    """Balanced d_3 window at N = 10^5 with margin H = 80."""
    return balanced_window(10**5, 80)


@pytest.fixture(scope="session")
def balanced_1e6():
    """Balanced d_3 window at N = 10^6 with margin H = 31 (= floor(N^(1/4)))."""
    return balanced_window(10**6, 31)


@pytest.fixture(scope="session")
def balanced_1e4():
    """Balanced d_3 window at N = 10^4 with margin H = 40."""
    return balanced_window(10**4, 40)
