import pytest

from veronese import graded_algebra as ga

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def P1():
    return ga.p1()


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion, printed in the summary."""
    state = {"detail": ""}
    yield state
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    name = request.node.name.removeprefix("test_")
    line = f"{name:<36} {'PASS' if ok else 'FAIL'}  {state['detail']}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
