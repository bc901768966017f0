"""Configuration for the z2kit toolkit."""
from __future__ import annotations

from functools import lru_cache

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from ._enums import OutputFormat
from ._exceptions import ConfigurationError


class Z2KitConfig(BaseSettings):
    """Configuration for the z2kit toolkit.

    Loads configuration from environment variables with the following precedence:
    1. Environment variables (prefixed with ``Z2KIT_``)
    2. .env file
    3. Default values
    """

    seed: int = Field(
        default=0,
        ge=0,
        description="Seed for the randomized free-part repair search",
    )
    term_cap: int = Field(
        default=1_000_000,
        gt=0,
        description="Maximum number of terms produced while normalizing a star polynomial",
    )
    output_format: OutputFormat = Field(
        default=OutputFormat.TEXT,
        description="Default CLI output format",
    )
    repair_attempts: int = Field(
        default=2000,
        ge=0,
        description="Budget of the fallback search in the free-part repair step",
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Threads used for independent verification items",
    )
    log_level: str = Field(
        default="WARNING",
        description="Logging level configured by the CLI",
    )

    model_config = SettingsConfigDict(
        env_prefix="Z2KIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache
def get_config() -> Z2KitConfig:
    """Get the z2kit configuration.

    Returns:
        Z2KitConfig: The z2kit configuration.

    Raises:
        ConfigurationError: If an environment value fails validation.
    """
    try:
        return Z2KitConfig()
    except ValidationError as e:
        raise ConfigurationError(
            "Invalid z2kit configuration",
            errors=e.errors(include_url=False),
        ) from e
