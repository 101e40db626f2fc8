# bcinverse_engine/config/settings.py
from enum import Enum
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Environment(str, Enum):
    LOCAL = "local"
    DEVELOPMENT = "development"
    PRODUCTION = "production"


class EnumerationSettings(BaseSettings):
    max_cardinality: int = Field(100_000, ge=1)
    max_tuples: int = Field(2_000_000, ge=1)


class EngineSettings(BaseSettings):
    # recompute b(cab)^-c with a second inner inverse and assert equality
    cross_check_inner_inverses: bool = True


class VerifierSettings(BaseSettings):
    default_seed: int = Field(20240229, ge=0)
    sample_count: int = Field(500, ge=1)
    workers: int = Field(1, ge=1)
    max_counterexamples: int = Field(10, ge=1)
    entry_bound: int = Field(3, ge=1)


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="BCI_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )

    environment: Environment = Environment.LOCAL
    project_name: str = "bcinverse-engine"
    version: str = "1.0.0"
    log_level: str = "WARNING"
    host: str = "0.0.0.0"
    port: int = Field(8000, ge=1, le=65535)

    enumeration: EnumerationSettings = EnumerationSettings()
    engine: EngineSettings = EngineSettings()
    verifier: VerifierSettings = VerifierSettings()

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {v!r}")
        return level

    @property
    def is_production(self) -> bool:
        return self.environment == Environment.PRODUCTION


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
