import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria for the package")


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.failed:
        _criteria.append(("PASS" if report.passed else "FAIL", props["criterion"]))


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for status, text in _criteria:
            terminalreporter.write_line(f"{status}  {text}")
