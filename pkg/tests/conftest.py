import sys
from pathlib import Path

import numpy as np
import pytest

from dynrf import SimParams

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def params():
    return SimParams()


@pytest.fixture
def rng():
    return np.random.default_rng(20211)



def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (float(str(k).rstrip("*")), str(k))):
        title, ok, detail = RESULTS[key]
        status = "INFO" if str(key).endswith("*") else ("PASS" if ok else "FAIL")
        terminalreporter.write_line(f"[{status}] {key:>3}. {title}: {detail}")
