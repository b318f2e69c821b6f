"""Configuration settings for rvclab with per-environment profiles."""
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment files and RVCLAB_ variables."""

    model_config = SettingsConfigDict(
        env_prefix="RVCLAB_",
        env_file_encoding="utf-8",
        extra="ignore"
    )

    # Search Budget
    budget_nodes: int = Field(
        default=10**8,
        ge=1,
        description="Node budget per solve"
    )
    budget_seconds: float = Field(
        default=300.0,
        gt=0,
        description="Wall-clock budget per solve in seconds"
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Solver worker processes"
    )

    # Size Caps
    max_rvcl_vertices: int = Field(
        default=18,
        ge=1,
        description="Largest graph solved for rvcl without --force"
    )
    max_rvc_vertices: int = Field(
        default=30,
        ge=1,
        description="Largest graph solved for rvc without --force"
    )

    # Pruning
    twin_pruning: bool = Field(
        default=True,
        description="Forbid equal colors on twins during rvcl search"
    )
    partial_rainbow_pruning: bool = Field(
        default=True,
        description="Cut prefixes without an optimistic rainbow completion"
    )
    settled_code_pruning: bool = Field(
        default=True,
        description="Cut prefixes whose final rainbow codes collide"
    )

    # Logging Configuration
    log_level: str = Field(
        default="INFO",
        description="Logging level"
    )
    log_file: Optional[str] = Field(
        default=None,
        description="Optional log file path"
    )

    # Reserved, the search is deterministic
    seed: Optional[int] = Field(
        default=None,
        description="RVCLAB_SEED"
    )

    # Environment name
    env_name: str = Field(
        default="dev",
        description="Current environment name"
    )


def get_env_file_path(env_name: str) -> Optional[Path]:
    """Get path to environment file."""
    env_dir = Path(__file__).parent / "environments"
    env_file = env_dir / f"{env_name}.env"

    if env_file.exists():
        return env_file
    return None


@lru_cache()
def get_settings(env_name: str = "dev") -> Settings:
    """
    Get cached settings instance for the specified environment.

    Args:
        env_name: Environment name (dev, ci)

    Returns:
        Settings instance with loaded configuration
    """
    env_file = get_env_file_path(env_name)

    if env_file:
        return Settings(_env_file=env_file, env_name=env_name)

    return Settings(env_name=env_name)


# Global settings instance - set by the CLI or conftest.py
_current_settings: Optional[Settings] = None


def set_current_settings(settings: Settings) -> None:
    """Set the current settings instance."""
    global _current_settings
    _current_settings = settings


def get_current_settings() -> Settings:
    """Get the current settings instance."""
    global _current_settings
    if _current_settings is None:
        _current_settings = get_settings()
    return _current_settings
