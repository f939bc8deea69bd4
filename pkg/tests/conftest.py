"""Shared helpers: fixture paths and program loading."""

from pathlib import Path

import pytest

from extlp.cli import parse_program_text
from extlp.elp import ExtendedLP

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def golden_text(name: str) -> str:
    return (GOLDEN / name).read_text()


def load_program(name: str) -> ExtendedLP:
    a, b, c = parse_program_text(fixture_path(name).read_text())
    assert c is not None, f"{name} has no cost section"
    return ExtendedLP(a, b, c)


@pytest.fixture
def lunch() -> ExtendedLP:
    return load_program("lunch.lp")
