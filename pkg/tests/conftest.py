import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


@pytest.fixture(autouse=True)
def _clean_convention_env(monkeypatch):
    monkeypatch.delenv("ZDG_CONVENTION", raising=False)


def pytest_report_header(config):
    from zdg._kernels import BACKEND, compiled_available

    return f"zdg kernels: {BACKEND} (compiled available: {compiled_available()})"
