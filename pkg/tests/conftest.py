import pytest


def pytest_configure(config):
    config.acceptance_lines = {}


@pytest.fixture
def record(request):
    """Log one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.acceptance_lines

    def _record(number, ok, detail):
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines[number] = line
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "acceptance_lines", {})
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
