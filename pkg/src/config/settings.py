"""
Application configuration management
"""

import logging
import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

PACKAGED_FIXTURES_DIR = Path(__file__).parent.parent / "fixtures"


class Settings(BaseSettings):
    """Application settings with environment variable support"""

    model_config = {
        "env_file": ".env" if os.getenv("TESTING") != "true" else None,
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
    }

    # Logging
    debug: bool = Field(default=False)
    log_level: str = Field(default="INFO")

    # Computation
    threads: int = Field(default=1, ge=1)  # 1 = sequential baseline
    refinement_route: Literal["direct", "minkowski"] = Field(default="direct")
    random_seed: int = Field(default=20240917)
    completeness_samples: int = Field(default=200, ge=0)

    # Gr(3,7) -> Gr(3,6) column relabelling used for cluster pullbacks
    projection_convention: Literal["order", "cyclic"] = Field(default="order")

    # Golden tables
    fixtures_dir: Optional[Path] = Field(default=None)

    # Gr(2,4) oracle grid half-width
    oracle_grid_bound: int = Field(default=5, ge=1)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level name"""
        level = v.upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("fixtures_dir")
    @classmethod
    def validate_fixtures_dir(cls, v: Optional[Path]) -> Optional[Path]:
        """Fixture override must point at an existing directory"""
        if v is not None and not v.is_dir():
            raise ValueError(f"Fixture directory does not exist: {v}")
        return v

    @property
    def resolved_fixtures_dir(self) -> Path:
        """Directory golden tables are read from"""
        return self.fixtures_dir if self.fixtures_dir is not None else PACKAGED_FIXTURES_DIR

    @property
    def effective_log_level(self) -> str:
        """DEBUG when debug is set, otherwise the configured level"""
        return "DEBUG" if self.debug else self.log_level

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__} "
            f"threads={self.threads} route={self.refinement_route}>"
        )


# Create global settings instance (skip during testing)
settings = None if os.getenv("TESTING") == "true" else Settings()


def get_settings() -> Settings:
    """Get settings instance (for testing compatibility)"""
    global settings
    if settings is None:
        settings = Settings()
    return settings


def reset_settings() -> None:
    """Drop the cached instance so the next get_settings() rereads the environment"""
    global settings
    settings = None
