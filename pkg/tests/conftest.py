"""Pytest fixtures and configuration."""

from pathlib import Path

import pytest

from src.catalog.fixtures import non_bol_loop, order8_bol_loops
from src.loopcore import (
    Loop,
    cyclic_group,
    dihedral_group,
    elementary_abelian,
    quaternion_group,
    symmetric_group,
)


@pytest.fixture
def c1() -> Loop:
    return cyclic_group(1)


@pytest.fixture
def c2() -> Loop:
    return cyclic_group(2)


@pytest.fixture
def c3() -> Loop:
    return cyclic_group(3)


@pytest.fixture
def c4() -> Loop:
    return cyclic_group(4)


@pytest.fixture
def c8() -> Loop:
    return cyclic_group(8)


@pytest.fixture
def klein() -> Loop:
    """C2 x C2."""
    return elementary_abelian(2)


@pytest.fixture
def s3() -> Loop:
    return symmetric_group(3)


@pytest.fixture
def q8() -> Loop:
    return quaternion_group()


@pytest.fixture
def d4() -> Loop:
    return dihedral_group(4)


@pytest.fixture
def non_bol() -> Loop:
    """Order-5 loop without two-sided inverses."""
    return non_bol_loop()


@pytest.fixture(scope="session")
def bol8() -> tuple[Loop, ...]:
    """The six nonassociative right Bol loops of order 8 (enumerated once)."""
    return order8_bol_loops()


@pytest.fixture
def test_data_dir(tmp_path: Path) -> Path:
    """Create a temporary directory for test data."""
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    return data_dir
