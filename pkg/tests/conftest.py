from __future__ import annotations

import pytest

from rankmetric import example_path
from rankmetric.code import RankCode
from rankmetric.field import make_field


@pytest.fixture(scope="session")
def f16():
    return make_field(2, 1, 4, "z^4+z+1")


@pytest.fixture(scope="session")
def omega(f16):
    return f16.parse("z^5")


@pytest.fixture(scope="session")
def example_code(f16, omega):
    return RankCode(f16, [[0, 1, omega, 0], [1, 0, 0, omega]])


@pytest.fixture(scope="session")
def example_file():
    return str(example_path())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
