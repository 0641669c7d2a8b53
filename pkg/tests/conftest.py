import os
import sys

import numpy as np
import pytest

# modules live flat at the repository root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))


@pytest.fixture
def rng():
    return np.random.default_rng(20240613)


@pytest.fixture
def system_file(tmp_path):
    """Write a system to tmp_path/<name>.json and return the path."""
    from lsystem import save_lsystem

    def write(system, name="system", provenance=None):
        path = tmp_path / f"{name}.json"
        save_lsystem(system, str(path), provenance)
        return str(path)

    return write
