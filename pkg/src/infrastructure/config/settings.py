"""Application settings configuration."""

from functools import lru_cache

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.domain.constants import DEFAULT_BUDGET, DEFAULT_PATH_CAP, MAX_GENERATOR_M
from src.domain.value_objects.alternative import MIN_ALTERNATIVES
from src.domain.value_objects.coalition import MAX_VOTERS

MIN_BUDGET = 1
MAX_JOBS = 256


class Settings(BaseSettings):
    """Run settings loaded from BALLOTCRAFT_* environment variables or .env files.

    Command-line flags override these values for a single run.
    """

    model_config = SettingsConfigDict(
        env_prefix="BALLOTCRAFT_",
        env_file=(".env.test", ".env"),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Search limits
    budget: int = Field(
        default=DEFAULT_BUDGET,
        ge=MIN_BUDGET,
        description="Maximum dominance checks or evaluations per audit scan",
    )
    path_cap: int = Field(
        default=DEFAULT_PATH_CAP,
        ge=1,
        description="Maximum vertex paths enumerated between two alternatives",
    )
    max_generator_m: int = Field(
        default=MAX_GENERATOR_M,
        le=MAX_GENERATOR_M,
        description="Largest m the domain generators accept",
    )
    max_voters: int = Field(
        default=MAX_VOTERS,
        ge=2,
        le=MAX_VOTERS,
        description="Largest n accepted for ballot tables and audits",
    )

    # Execution
    jobs: int = Field(
        default=1,
        ge=1,
        le=MAX_JOBS,
        description="Worker processes for strategy-proofness scans",
    )
    seed: int = Field(default=0, ge=0, description="Seed for sampled audits")
    sample_count: int = Field(
        default=50,
        ge=1,
        description="Ballot tables drawn by a sampled audit",
    )

    # Logging
    log_level: str = Field(
        default="warning",
        description="Logging level (debug, info, warning, error, critical)",
    )
    log_format: str = Field(
        default="console",
        description="Log output format (console or json)",
    )

    # Application
    environment: str = Field(
        default="development",
        description="Application environment (development, test, production)",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        """Validate log level is one of the allowed values."""
        allowed_levels = {"debug", "info", "warning", "error", "critical"}
        if value.lower() not in allowed_levels:
            raise ValueError(f"log_level must be one of {allowed_levels}, got: {value}")
        return value.lower()

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, value: str) -> str:
        """Validate log format is one of the allowed values."""
        allowed_formats = {"console", "json"}
        if value.lower() not in allowed_formats:
            raise ValueError(
                f"log_format must be one of {allowed_formats}, got: {value}"
            )
        return value.lower()

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, value: str) -> str:
        """Validate environment is one of the allowed values."""
        allowed_envs = {"development", "test", "production"}
        if value.lower() not in allowed_envs:
            raise ValueError(f"environment must be one of {allowed_envs}, got: {value}")
        return value.lower()

    @model_validator(mode="after")
    def validate_generator_cap(self) -> "Settings":
        """Reject a generator cap below the smallest supported m."""
        if self.max_generator_m < MIN_ALTERNATIVES:
            raise ValueError(
                f"max_generator_m must be at least {MIN_ALTERNATIVES}, "
                f"got: {self.max_generator_m}"
            )
        return self


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Returns:
        Settings instance
    """
    return Settings()
