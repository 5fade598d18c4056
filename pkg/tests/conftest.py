import numpy as np
import pytest

from relspin import linalg
from relspin.kinematics import boost_from_speed, particle_from_gamma

BETAS = np.linspace(0.0, 0.999, 50)
GAMMAS = np.linspace(1.0, 20.0, 50)


@pytest.fixture(params=linalg.available_backends())
def backend(request):
    previous = linalg.use_backend(request.param)
    yield request.param
    linalg.use_backend(previous)


@pytest.fixture(scope="session")
def grid():
    """The default 50 x 50 (boost, particle) grid."""
    particles = [particle_from_gamma(g) for g in GAMMAS]
    return [(boost_from_speed(b), p) for b in BETAS for p in particles]


_CRITERIA: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("test_criterion_")[1]
    if report.failed:
        detail = getattr(getattr(report.longrepr, "reprcrash", None), "message", "")
        _CRITERIA[name] = ("FAIL", detail.splitlines()[0] if detail else "")
    elif report.when == "call" and name not in _CRITERIA:
        _CRITERIA[name] = ("PASS", "")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        status, detail = _CRITERIA[name]
        number, _, title = name.partition("_")
        line = f"criterion {int(number):2d} {status}  {title.replace('_', ' ')}"
        terminalreporter.write_line(f"{line}  [{detail[:200]}]" if detail else line)
