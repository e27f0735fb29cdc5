"""Test the verification suites
"""

import inspect
import sys
import time

from . import checks, func
from .checks import SUITES, CheckReport, Failure, identities, oracles, run_cases
from .formulas import FormulaId
from .oracles import count_callan_bruteforce


def test_identities():
    """The identities pass on a small agreement grid"""
    report = identities(6)
    assert report == CheckReport("identities", report.cases_run, ())
    assert report.cases_run > 6 * 6 * 7


def test_identities_full_grid():
    """All formulas agree on 1 <= n, k <= 40 within the time budget"""
    start = time.perf_counter()
    report = identities(40)
    elapsed = time.perf_counter() - start
    assert report.ok, [str(x) for x in report.failures[:5]]
    assert report.cases_run > 40 * 40 * (len(FormulaId) - 1)
    # coverage tracing inflates the timing
    if sys.gettrace() is None:
        assert elapsed < 30


def test_configuration_read_once(monkeypatch):
    """A suite reads the configuration file once, not per enumeration"""
    reads = []
    read_yaml = func.read_yaml

    def counting_read(path):
        reads.append(path)
        return read_yaml(path)

    monkeypatch.delenv(func.CONFIG_ENV, raising=False)
    monkeypatch.setattr(func, "read_yaml", counting_read)
    func.load_config.cache_clear()
    assert oracles(4, 4).ok
    assert count_callan_bruteforce(2, 3) == 46
    assert reads == [func.CONFIG_PATH]


def test_oracles():
    """The oracles pass on small enumerations"""
    report = oracles(max_sum=6, max_cells=6)
    assert report.ok
    assert report.suite == "oracles"


def test_corrupt_eulerian_is_named(corrupt_eulerian):
    """A corrupted Eulerian cell fails the memo comparison by name"""
    report = identities(3)
    assert not report.ok
    assert Failure("eulerian(3, 2)", 4, 5) in report.failures
    assert corrupt_eulerian[3, 2] == 5


def test_refusals_are_failures():
    """Exceptions become failures carrying the message"""
    report = run_cases(
        "demo",
        [
            ("refused", count_callan_bruteforce, (6, 5)),
            ("malformed", int, ("one",)),
        ],
    )
    assert report.cases_run == 2
    assert [x.case for x in report.failures] == ["refused", "malformed"]
    assert report.failures[0].actual.startswith("EnumerationBoundError: size 11")
    assert report.failures[1].actual.startswith("ValueError: invalid literal")


def test_suites():
    """Both suites are registered"""
    assert set(SUITES) == {"identities", "oracles"}


def test_case_functions_documented():
    """Every function of the suites module carries a docstring"""
    functions = [
        name
        for name, value in inspect.getmembers(checks, inspect.isfunction)
        if value.__module__ == checks.__name__ and not inspect.getdoc(value)
    ]
    assert functions == []
