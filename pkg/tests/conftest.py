import os
import sys

import pytest

try:
    import chainmat  # noqa: F401
except ImportError:  # running from a checkout without installing
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print a FAIL line for acceptance criteria (they print PASS themselves)."""
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and report.failed and item.name.startswith("test_criterion_"):
        number = item.name.split("_")[2]
        print(f"\nACCEPTANCE {int(number):2d}: FAIL  ({item.name})")
