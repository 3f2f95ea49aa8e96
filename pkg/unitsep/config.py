import logging
from pathlib import Path
from typing import Any

from platformdirs import user_data_dir
from pydantic import BaseModel, Field, ValidationError

from .classify import DivisionCriterion

logger = logging.getLogger(__name__)

APP_NAME = "unitsep"
SETTINGS_FILE = "settings.json"


class Settings(BaseModel):
    """defines the analysis settings model"""

    max_order: int = Field(256, ge=1, description="largest group materialised as a cayley table")
    factor_threshold: int = Field(
        32, ge=1, description="products with an abelian factor above this order are tensored"
    )
    bianchi_extension: bool = False
    division_criterion: DivisionCriterion = DivisionCriterion.local
    oracle: bool = True
    max_cosets: int = Field(10000, ge=1)
    sign_precision: int = Field(64, ge=16)
    sign_precision_cap: int = Field(1024, ge=16)
    workers: int = Field(1, ge=1)
    isomorphism_limit: int = Field(128, ge=1)


def get_data_dir() -> Path:
    """per-user directory holding settings.json, created on first use"""
    path = Path(user_data_dir(APP_NAME))
    path.mkdir(parents=True, exist_ok=True)
    return path


def settings_path() -> Path:
    return get_data_dir() / SETTINGS_FILE


def load_config() -> Settings:
    """stored analysis defaults, or the built-in ones when nothing valid is stored"""
    path = settings_path()
    if not path.is_file():
        return Settings()
    try:
        return Settings.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        logger.warning("ignoring %s: %d invalid field(s)", path, e.error_count())
        return Settings()


def save_config(settings: Settings) -> None:
    settings_path().write_text(settings.model_dump_json(indent=4), encoding="utf-8")


def override(settings: Settings, **updates: Any) -> Settings:
    """a copy with the given flags applied, None meaning keep the stored value"""
    return settings.model_copy(update={k: v for k, v in updates.items() if v is not None})


def with_value(settings: Settings, key: str, value: str) -> Settings:
    """a validated copy with one setting replaced, raises KeyError or ValidationError"""
    if key not in Settings.model_fields:
        raise KeyError(key)
    return Settings.model_validate({**settings.model_dump(), key: value})
