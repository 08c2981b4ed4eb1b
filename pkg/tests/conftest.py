import pytest

from latinquandle import CayleyTable
from latinquandle.constructions import build_ipq, core, cyclic_group, elementary_abelian_3

import oracles

ODD = [3, 5, 7, 9, 11, 13, 15]


@pytest.fixture(scope="session")
def q5_left():
    return CayleyTable(oracles.left_core_cells(5))


@pytest.fixture(scope="session")
def q5_right():
    return CayleyTable(oracles.right_core_cells(5))


@pytest.fixture(scope="session")
def q3():
    return CayleyTable(oracles.left_core_cells(3))


@pytest.fixture(scope="session")
def q9_ipq():
    return build_ipq(elementary_abelian_3(2))


@pytest.fixture(scope="session")
def latin_quandles():
    """Every labelled latin quandle of order <= 7 from the backtracking oracle."""
    return [CayleyTable(T) for n in range(1, 8) for T in oracles.enumerate_latin_quandles(n)]


def involutory_corpus():
    """Constructed involutory quandles of order <= 15."""
    out = []
    for n in ODD:
        out.append((f"left-core-{n}", core(cyclic_group(n), 0, "left")))
        out.append((f"right-core-{n}", core(cyclic_group(n), 0, "right")))
    out.append(("ipq-3", build_ipq(elementary_abelian_3(1))))
    out.append(("ipq-9", build_ipq(elementary_abelian_3(2))))
    return out


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    criterion = item.get_closest_marker("criterion")
    if criterion and rep.when == "call":
        _acceptance.append((criterion.args[0], criterion.args[1], rep.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    results = {}
    for number, title, outcome in _acceptance:
        prev = results.get(number, (title, "passed"))
        results[number] = (title, "failed" if "failed" in (prev[1], outcome) else outcome)
    for number in sorted(results):
        title, outcome = results[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if outcome == 'passed' else 'FAIL'}  {title}")
