"""Application configuration."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="WEIGHTDIRAC_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="weight-dirac-engine")
    app_version: str = Field(default="0.1.0")
    debug: bool = Field(default=False)
    log_level: str = Field(default="WARNING")

    # Execution
    max_workers: int = Field(default=1, ge=1)
    output_format: Literal["jsonl", "csv"] = Field(default="jsonl")

    # Index support certification: halo radius in simple-root steps
    certification_halo: int = Field(default=1, ge=1)

    # Memoized blocks per module (0 = unbounded)
    block_cache_size: int = Field(default=0, ge=0)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
