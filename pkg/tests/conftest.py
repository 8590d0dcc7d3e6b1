from __future__ import annotations

import pytest

from maxcode.stdprops import make_bifix, make_did2, make_dsub, make_fig1, make_prefix, make_suffix, make_tsub
from maxcode.transducer import t_union

A = "01"

_acceptance: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or not (report.when == "call" or report.failed):
        return
    number, title = marker.args
    _, ok = _acceptance.get(number, (title, True))
    _acceptance[number] = (title, ok and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}")


@pytest.fixture(scope="session")
def px():
    return make_prefix(A)


@pytest.fixture(scope="session")
def sx():
    return make_suffix(A)


@pytest.fixture(scope="session")
def bx():
    return make_bifix(A)


@pytest.fixture(scope="session")
def tsub1():
    return make_tsub(1, A)


@pytest.fixture(scope="session")
def dsub1():
    return make_dsub(1, A)


@pytest.fixture(scope="session")
def dsub2():
    return make_dsub(2, A)


@pytest.fixture(scope="session")
def did2():
    return make_did2(A)


@pytest.fixture(scope="session")
def fig1():
    return make_fig1(A)


@pytest.fixture(scope="session")
def px_dsub1(px, dsub1):
    return t_union(px, dsub1)
