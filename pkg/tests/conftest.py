"""Shared fixtures and the per-criterion acceptance summary.

Tests tagged ``@pytest.mark.criterion(k)`` feed one pass/fail line per
acceptance criterion, printed at the end of the run.
"""
from collections import defaultdict

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=500, deadline=None)
settings.load_profile("default")

CRITERIA = {
    1: "zero congruences mod Phi_n^2, n in {3,7,11}, m in {1,2}",
    2: "congruences mod Phi_n^2 Phi_{n^2}^2, n in {3,7,11}",
    3: "higher-power congruences, (n,r) in {(3,1),(7,1),(3,2)}",
    4: "base congruence mod Phi_n^2, odd n <= 15, both ranges",
    5: "terminating 8phi7 transformation suite",
    6: "Phi_n factor counting (least index table, multiplicity 2)",
    7: "classical supercongruences, both arithmetic paths",
    8: "conjecture evidence reports",
    9: "property suites and root-of-unity oracle agreement",
}

_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): counts toward acceptance criterion k")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _outcomes[value].append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        results = _outcomes.get(k)
        if not results:
            continue
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {k}: {verdict} ({sum(results)}/{len(results)} checks) - {CRITERIA[k]}")
