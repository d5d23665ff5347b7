import pytest

from singcurve import accel

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Log one acceptance verdict; all lines are printed after the run."""

    def _record(label: str, passed: bool, detail: str = "") -> None:
        verdict = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{verdict}] {label}" + (f" -- {detail}" if detail else ""))

    return _record


@pytest.fixture(params=[b for b in accel.BACKENDS if b == "numpy" or accel.HAVE_NUMBA])
def backend(request):
    with accel.use_backend(request.param):
        yield request.param


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
