from __future__ import annotations

import sys
from pathlib import Path

import pytest

from kfc import models
from kfc.complex import dual, tensor

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
sys.path.insert(0, str(HERE))


def base_models():
    return [models.unknot(), models.t23(), dual(models.t23()),
            models.figure_eight(), models.staircase(2, 1, 1, 2)]


def all_models():
    """The five base models plus every pairwise tensor (including squares)."""
    base = base_models()
    out = list(base)
    for i, x in enumerate(base):
        for y in base[i:]:
            out.append(tensor(x, y))
    return out


@pytest.fixture(scope="session")
def model_set():
    return all_models()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
