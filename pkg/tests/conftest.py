"""Shared fixtures and the per-criterion acceptance summary."""
import zlib

import pytest

from coadjoint import sampling

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture
def rng(request):
    # one stream per test so tests stay independent of ordering
    return sampling.rng_for(20261017, zlib.crc32(request.node.name.encode()))


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when != "call" and not report.failed:
        return
    props = dict(report.user_properties)
    label = props.get("criterion")
    if label is None:
        return
    status = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE[label] = (status, props.get("detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0])):
        status, detail = _ACCEPTANCE[label]
        line = f"{status}  criterion {label}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
