"""
Configuration management using Pydantic Settings.
Values come from keyword arguments only (CLI flags or library callers); the
process environment is never consulted.
"""

from functools import lru_cache
from typing import Any, Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings for counting, enumeration and search."""

    model_config = SettingsConfigDict(case_sensitive=False, extra="ignore", frozen=True)

    # Application
    app_name: str = Field(default="twopage")
    environment: Literal["development", "production"] = "development"
    log_level: str = "WARNING"
    progress: bool = Field(default=False, description="Show tqdm progress bars on stderr")

    # Enumeration
    jobs: int = Field(default=1, ge=1, le=256, description="Worker processes for enumeration")
    brute_force_max_n: int = Field(default=10, ge=3, le=10)
    enumeration_max_n: int = Field(default=15, ge=7, le=17)
    enumeration_big_n: int = Field(default=17, ge=7, le=17)

    # Counterexample search
    search_budget: int = Field(
        default=10_000_000, ge=1, description="Candidate colorings examined before giving up"
    )
    search_seed: int = Field(default=0, ge=0)
    search_batch_size: int = Field(default=65_536, ge=1, le=1 << 22)
    search_random_rounds: int = Field(default=64, ge=0)

    # Analysis
    hamiltonian_edge_cap: int = Field(
        default=2000, ge=1, description="Uncrossed-subgraph size above which cycle search aborts"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Accept standard level names in any case."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return level

    @field_validator("enumeration_big_n")
    @classmethod
    def validate_big_n(cls, v: int, info) -> int:
        """The --big ceiling cannot sit below the regular ceiling."""
        regular = info.data.get("enumeration_max_n", 15)
        if v < regular:
            raise ValueError(f"enumeration_big_n ({v}) must be >= enumeration_max_n ({regular})")
        return v

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)

    @property
    def is_production(self) -> bool:
        """Check if JSON logging is requested."""
        return self.environment == "production"


_overrides: dict[str, Any] = {}


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.
    Uses lru_cache to ensure singleton behavior.
    """
    return Settings(**_overrides)


def configure(**overrides: Any) -> Settings:
    """
    Replace the cached settings with one built from the given overrides.

    Args:
        **overrides: Field values; ``None`` values are ignored

    Returns:
        The new settings instance
    """
    _overrides.clear()
    _overrides.update({k: v for k, v in overrides.items() if v is not None})
    get_settings.cache_clear()
    return get_settings()
