import pytest

_CRITERIA = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_CRITERIA] = []


@pytest.fixture
def criteria_log(request):
    """Collects acceptance status lines for the terminal summary."""
    return request.config.stash[_CRITERIA]


def pytest_terminal_summary(terminalreporter, config):
    lines = sorted(config.stash.get(_CRITERIA, []), key=lambda s: int(s.split()[2].rstrip(":")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
