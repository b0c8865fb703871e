import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracle.py importable

from balanced_cycles import catalog


@pytest.fixture(scope="session")
def groups():
    return catalog()
