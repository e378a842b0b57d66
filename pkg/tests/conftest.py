import sys

import pytest

from cuspbound.config import Config, get_config, set_config


@pytest.fixture
def restore_config():
    saved = get_config()
    yield
    set_config(saved)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
