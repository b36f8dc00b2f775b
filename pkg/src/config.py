"""
Defaults shared by the library, the CLI and the server.
Environment overrides are optional; nothing here is required to run.
"""
import os
from typing import Optional

from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from src.errors import ParameterError

# --- Numerical tolerances ---
ALGEBRA_TOL = 1e-12
CONTINUITY_TOL = 1e-6
ANGLE_TOL = 1e-9
BASE_DIGITS = 12

# --- Sampling ---
DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0
DEFAULT_APPROACH_STEPS = 16
DEFAULT_EPS0 = 0.1

# --- Server ---
SERVER_HOST = "127.0.0.1"
SERVER_PORT = 8080


class Settings(BaseModel):
    seed: int = DEFAULT_SEED
    # None keeps the sample count of the element file or scenario
    samples: Optional[int] = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1)
    port: int = SERVER_PORT


def _env_int(name: str) -> Optional[int]:
    value = os.environ.get(name)
    if value is None or value.strip() == "":
        return None
    try:
        return int(value)
    except ValueError:
        raise ParameterError(f"{name} must be an integer, got '{value}'.") from None


def load_settings() -> Settings:
    """Builds the settings from FELL_LAB_* environment variables, falling back to defaults."""
    overrides = {
        "seed": _env_int("FELL_LAB_SEED"),
        "samples": _env_int("FELL_LAB_SAMPLES"),
        "workers": _env_int("FELL_LAB_WORKERS"),
        "port": _env_int("FELL_LAB_PORT"),
    }
    try:
        return Settings(**{k: v for k, v in overrides.items() if v is not None})
    except PydanticValidationError as e:
        raise ParameterError(f"Invalid FELL_LAB_* setting: {e}") from e
