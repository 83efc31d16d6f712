"""Configuration management from environment variables and the YAML profile"""

from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Type, TypeVar

import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from robustlab.core.exceptions import ConfigError

DEFAULT_PROFILE_PATH = "config/robustlab.yaml"

ModelT = TypeVar("ModelT", bound=BaseModel)


def load_yaml(path: str | Path) -> Dict[str, Any]:
    """Read a YAML key/value file, returning an empty dict for empty files"""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Config file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Malformed YAML in {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Top level of {path} must be a mapping")
    return data


def load_model(model: Type[ModelT], data: Dict[str, Any], source: str = "config") -> ModelT:
    """Validate a mapping into a pydantic model, converting failures to ConfigError"""
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid {source}: {e}") from e


def _load_profile(path: str) -> Dict[str, Any]:
    """Load the profile YAML; a missing profile means built-in defaults"""
    if not Path(path).exists():
        return {}
    return load_yaml(path)


class Settings(BaseSettings):
    """Runtime configuration loaded from ROBUSTLAB_* environment variables"""

    environment: str = "development"
    debug: bool = False
    log_level: str = "INFO"

    config_path: str = Field(
        default=DEFAULT_PROFILE_PATH,
        description="YAML profile with lab, pi2 and case-study defaults"
    )
    default_nu: float = Field(
        default=3.0,
        gt=0,
        description="Sharpness of the new conjunction operator when none is given"
    )
    default_seed: int = Field(
        default=0,
        description="Seed used when a command is not given an explicit --seed"
    )
    max_workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes for case-study fan-out"
    )

    # Profile (from YAML) - will be loaded by validator
    profile: Dict[str, Any] = {}

    @model_validator(mode="before")
    @classmethod
    def load_profile_from_yaml(cls, data: Dict[str, Any]) -> Dict[str, Any]:
        """Load the profile section from the YAML file"""
        if not isinstance(data, dict):
            return data
        if "profile" not in data or not data["profile"]:
            path = data.get("config_path", DEFAULT_PROFILE_PATH)
            data["profile"] = _load_profile(path)
        return data

    def section(self, name: str) -> Dict[str, Any]:
        """Return one top-level profile section (empty when absent)"""
        value = self.profile.get(name) or {}
        if not isinstance(value, dict):
            raise ConfigError(f"Profile section '{name}' must be a mapping")
        return value

    model_config = SettingsConfigDict(
        env_prefix="ROBUSTLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
