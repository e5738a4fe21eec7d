import pytest

# acceptance outcomes, filled in by test_acceptance and echoed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line("criterion %d: %s  %s" % (key, "PASS" if ok else "FAIL", detail))


@pytest.fixture
def record_criterion():
    def record(number, ok, detail):
        ACCEPTANCE[number] = (bool(ok), detail)
        print("criterion %d: %s  %s" % (number, "PASS" if ok else "FAIL", detail))
    return record
