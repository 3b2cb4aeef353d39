import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from divgames import make_example3  # noqa: E402
from helpers import red_alone_blue_mixed  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--skip-extended", action="store_true",
                     help="skip the Bell(12)-sized reduction checks")


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--skip-extended"):
        return
    skip = pytest.mark.skip(reason="--skip-extended given")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def ex3():
    return make_example3()


@pytest.fixture
def rabm():
    return red_alone_blue_mixed()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
