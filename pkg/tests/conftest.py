import pytest
from hypothesis import settings

from extravertex.geometry import validate

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def square_cw():
    return validate([(0, 0), (0, 1), (1, 1), (1, 0)])


@pytest.fixture
def square_ccw():
    return validate([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def dart():
    return validate([(0, 0), (4, 0), (2, 1), (2, 3)])


@pytest.fixture
def criterion(request):
    """Record an acceptance result; printed in the terminal summary."""
    results = request.config.stash.setdefault(_RESULTS, [])

    def record(name: str, ok: bool, detail: str = ""):
        results.append((name, ok, detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
