"""Setup for pytest
"""

import pytest
import yaml

from . import exact
from .checks import TABLE_ONE
from .oracles import BicoloredPermutation


RUNNING_EXAMPLE = "L0 L2 L3 R1 R4 R5 L4 L7 R2 R8 L1 L8 R3 L5 L6 L9 R6 R7 R9"


@pytest.fixture
def config_file(tmp_path):
    """Generate a configuration file overriding a single bound

    Args:
      tmp_path: temporary area to use to write files

    Returns:
      path to the YAML file
    """
    tmp_path.mkdir(exist_ok=True)
    file_path = tmp_path / "config.yaml"
    with open(file_path, "w", encoding="utf-8") as stream:
        yaml.dump({"bounds": {"callan_max_size": 4}}, stream)
    return file_path


@pytest.fixture
def table_one():
    """The 6 x 6 corner of the poly-Bernoulli table, rows by n"""
    return TABLE_ONE


@pytest.fixture
def running_example():
    """A Callan permutation of size (9, 8) with the sentinels L0 and R9"""
    return BicoloredPermutation.parse(RUNNING_EXAMPLE)


@pytest.fixture
def fresh_tables():
    """Empty the memo tables before and after a test"""
    exact.reset_tables()
    yield exact
    exact.reset_tables()


@pytest.fixture
def corrupt_eulerian(monkeypatch):
    """Replace the Eulerian memo table with one holding <3, 2> = 5

    Args:
      monkeypatch: pytest's monkeypatch fixture

    Returns:
      the corrupted table
    """
    table = exact.MemoTable("eulerian", exact.eulerian_rule)
    table.store((3, 2), 5)
    monkeypatch.setattr(exact, "EULERIAN", table)
    return table
