import sys

from hypothesis import settings

# exact arithmetic makes single examples slow but deterministic
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
