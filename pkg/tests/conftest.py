from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion, printed at the end of the run."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(num: int, title: str, ok: bool, note: str = ""):
        line = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {title}"
        if note:
            line += f"  ({note})"
        print(line)
        lines.append((num, line))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
