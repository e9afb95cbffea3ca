import pytest

from quantmat import MqSpec, build_mq


@pytest.fixture(scope="session")
def sys2():
    return build_mq(MqSpec(2))


@pytest.fixture(scope="session")
def sys3():
    return build_mq(MqSpec(3))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # acceptance verdicts are printed inside captured tests; replay them
    # here so the plain `pytest -v` log carries one line per criterion
    try:
        from test_acceptance import CRITERION_LINES
    except ImportError:
        return
    for line in CRITERION_LINES:
        terminalreporter.write_line(line)
