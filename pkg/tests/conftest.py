import os

import pytest
from hypothesis import settings

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "liftlaw", "fixtures")

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_criteria: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    detail = getattr(item, "criterion_detail", "")
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[number] = (title, "PASS" if rep.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict, detail = _criteria[number]
        line = f"criterion {number} [{title}]: {verdict}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture
def fixture_path():
    return lambda name: os.path.join(FIXTURE_DIR, name)


@pytest.fixture
def detail(request):
    """Attach a one-line summary to the acceptance line of the running test."""
    def set_detail(text: str) -> None:
        request.node.criterion_detail = text
        print(text)
    return set_detail
