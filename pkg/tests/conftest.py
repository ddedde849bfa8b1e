import sys

import mpmath
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, derandomize=True, max_examples=100)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _reset_mpmath_precision():
    """Library code never depends on the global context; keep tests honest about it too."""
    saved = mpmath.mp.prec
    mpmath.mp.prec = 53
    yield
    mpmath.mp.prec = saved


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
