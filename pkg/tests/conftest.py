import pytest

from dfvskit import _backend


@pytest.fixture(params=[mod.NAME for mod in _backend.available()])
def backend(request):
    """Run the test once per importable kernel backend."""
    previous = _backend.use(request.param)
    yield request.param
    _backend.use(previous)


_acceptance_lines = {}


def report(number, ok, detail):
    """Record the one-line verdict of an acceptance criterion."""
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} - {detail}"
    _acceptance_lines[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_lines):
        terminalreporter.write_line(_acceptance_lines[number])
