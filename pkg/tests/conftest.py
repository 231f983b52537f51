import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from afm_sqrtwell import PotentialParams  # noqa: E402


@pytest.fixture
def reduced_params():
    """m = 2, a = 1 maps the physical problem onto the dimensionless one."""

    def make(beta):
        return PotentialParams(2.0, 1.0, beta)

    return make


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
