import pytest


@pytest.fixture
def announce(request):
    """Write a pass/fail line through the terminal reporter, which holds the
    real stdout from before pytest's capture kicked in."""
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")

    def _announce(number: int, ok: bool, detail: str):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] acceptance {number}: {detail}"
        if reporter is not None:
            reporter.write_line(line)
        else:
            print(line)
        assert ok, f"acceptance criterion {number} failed: {detail}"

    return _announce
