from pathlib import Path

import pytest

from gwdeg.fields import FieldDescriptor
from gwdeg.problem import read_problem

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def QQ():
    return FieldDescriptor.rationals()


@pytest.fixture
def QQi():
    return FieldDescriptor.rationals().extend("i", [1, 0, 1])


def load_fixture(name):
    return read_problem(FIXTURES / name)


def all_fixture_names():
    return sorted(p.name for p in FIXTURES.glob("*.yaml"))
