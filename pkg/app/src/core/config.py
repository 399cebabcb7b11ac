from app.utils.constants import (
    DEFAULT_EFB_BENCH_LIMIT,
    DEFAULT_GAMMA_BENCH_LIMIT,
    DEFAULT_ORACLE_LIMIT,
    DEFAULT_SEED,
    DEFAULT_TABLE_LIMIT,
    DEFAULT_VERIFY_SAMPLES,
    ENV_PREFIX,
)
from pydantic import BaseModel, Field, field_validator
from typing import Literal, Mapping
from pathlib import Path
import json
import os


class EngineConfig(BaseModel):
    """Settings shared by every command."""

    oracle_limit: int = Field(DEFAULT_ORACLE_LIMIT, ge=1)
    table_limit: int = Field(DEFAULT_TABLE_LIMIT, ge=1)
    gamma_bench_limit: int = Field(DEFAULT_GAMMA_BENCH_LIMIT, ge=1)
    efb_bench_limit: int = Field(DEFAULT_EFB_BENCH_LIMIT, ge=1)
    verify_samples: int = Field(DEFAULT_VERIFY_SAMPLES, ge=1)
    default_seed: int = DEFAULT_SEED
    scalar_mode: Literal["exact", "float"] = "exact"
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return level


def env_overrides(environ: Mapping[str, str] | None = None) -> dict[str, str]:
    """CLIFFOCK_<FIELD> variables, keyed by field name."""
    environ = os.environ if environ is None else environ
    out = {}
    for field in EngineConfig.model_fields:
        value = environ.get(ENV_PREFIX + field.upper())
        if value is not None and value != "":
            out[field] = value
    return out


def load_config(
    path: str | Path | None = None, environ: Mapping[str, str] | None = None
) -> EngineConfig:
    """Read config.json (when given) and apply environment overrides.

    Raises FileNotFoundError, json.JSONDecodeError or pydantic.ValidationError.
    """
    data = {}
    if path is not None:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        if not isinstance(data, dict):
            raise ValueError("top-level JSON value must be an object")
    data.update(env_overrides(environ))
    return EngineConfig.model_validate(data)
