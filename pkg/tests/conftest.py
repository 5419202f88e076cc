"""Shared fixtures: algebras are expensive enough to build once per session."""

import sys

import pytest

from superloop.realizations import build_C, build_sl
from superloop.representations import semisimple_part


def pytest_terminal_summary(terminalreporter):
    """Echo one result line per acceptance criterion into the terminal report.

    The acceptance tests record their lines in a module-level list; writing
    them here goes through pytest's own terminal writer, which bypasses
    output capture.
    """
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "CRITERION_LINES", []) if mod else []
    if not lines:
        return
    terminalreporter.write_line("")
    for line in lines:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sl21():
    return build_sl(2, 1)


@pytest.fixture(scope="session")
def sl31():
    return build_sl(3, 1)


@pytest.fixture(scope="session")
def c3():
    return build_C(3)


@pytest.fixture(scope="session")
def sl21_ss(sl21):
    g, real = sl21
    return semisimple_part(g, real)


@pytest.fixture(scope="session")
def sl31_ss(sl31):
    g, real = sl31
    return semisimple_part(g, real)


@pytest.fixture(scope="session")
def c3_ss(c3):
    g, real = c3
    return semisimple_part(g, real)
