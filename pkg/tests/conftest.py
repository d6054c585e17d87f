import pytest
from hypothesis import HealthCheck, settings

from surf610.surface import SurfacePair

settings.register_profile("repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

DIAGONAL = ("Z0^2 + Y0^3 + Y1^3 + X0^6", "U0^2 + Y0^5 + Y1^5 + X0^10")
SHIFTED = ("Z0^2 + Y0^3 + Y1^3 + X0^6", "U0^2 + Y0^5 + 2*Y1^5 + X0^10")


@pytest.fixture
def diagonal_pair():
    return SurfacePair.parse(*DIAGONAL)


@pytest.fixture
def shifted_pair():
    return SurfacePair.parse(*SHIFTED)


_ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, part): one part of a numbered acceptance criterion")


def pytest_runtest_setup(item):
    m = item.get_closest_marker("acceptance")
    if m is not None:
        item.user_properties.append(("acceptance", tuple(m.args)))


def pytest_runtest_logreport(report):
    tag = dict(report.user_properties).get("acceptance")
    if tag is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        number, part = tag
        _ACCEPTANCE.setdefault(number, []).append((part, report.passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[number]
        failed = [p for p, ok in parts if not ok]
        detail = f"{len(parts) - len(failed)}/{len(parts)} parts"
        if failed:
            detail += "; failing: " + ", ".join(failed)
        terminalreporter.write_line(f"criterion {number}: {'FAIL' if failed else 'PASS'} ({detail})")
