"""Pytest configuration and fixtures for the tropgrass tests."""

import os
import random
from pathlib import Path
from typing import Callable, Generator

import pytest

# Settings must not pick up a developer .env file
os.environ.setdefault("TESTING", "true")

from src.config import settings as settings_module  # noqa: E402
from src.config.settings import Settings  # noqa: E402
from src.exactgeom import Cone, Fan  # noqa: E402
from src.tropfan import build_F  # noqa: E402

# ============================================================================
# Path Fixtures
# ============================================================================


@pytest.fixture
def fixtures_dir() -> Path:
    """Return the path to the test fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_path(fixtures_dir: Path) -> Callable[[str], Path]:
    """Factory returning the path of a fixture file."""

    def _path(filename: str) -> Path:
        return fixtures_dir / filename

    return _path


# ============================================================================
# Settings Fixtures
# ============================================================================


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Drop the cached settings instance around every test."""
    settings_module.reset_settings()
    yield
    settings_module.reset_settings()


@pytest.fixture
def test_settings() -> Settings:
    """Settings with the sequential defaults."""
    return Settings(
        threads=1,
        refinement_route="direct",
        completeness_samples=50,
        random_seed=7,
    )


# ============================================================================
# Randomness
# ============================================================================


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator for property tests."""
    return random.Random(20240917)


# ============================================================================
# Geometry Fixtures
# ============================================================================


@pytest.fixture
def quadrant_fan() -> Fan:
    """The four closed quadrants of the plane."""
    cones = tuple(
        Cone.from_inequalities([(sx, 0), (0, sy)], 2)
        for sx in (1, -1)
        for sy in (1, -1)
    )
    return Fan(ambient_dim=2, maximal_cones=cones, complete=True)


@pytest.fixture(scope="session")
def fan_2_5() -> Fan:
    """F_{2,5}, the pentagon fan."""
    return build_F(2, 5)


@pytest.fixture(scope="session")
def fan_3_6() -> Fan:
    """F_{3,6}; computed once per session."""
    return build_F(3, 6)
