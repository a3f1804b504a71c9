import pytest

# (number, label, passed) tuples recorded by the acceptance tests
_ACCEPTANCE: list[tuple[int, str, bool]] = []


@pytest.fixture
def criterion():
    """Recorder for acceptance checks; one summary line is printed per entry."""

    def record(number: int, label: str, passed: bool) -> None:
        _ACCEPTANCE.append((number, label, passed))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, passed in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{number:2d}] {status}  {label}")
