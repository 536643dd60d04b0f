from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Literal, Optional, get_args

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
LOG_LEVELS = get_args(LogLevel)


class EngineSettings(BaseSettings):
    """Настройки движка и CLI. Любое поле переопределяется через env QSER_<FIELD>."""

    model_config = SettingsConfigDict(env_prefix="QSER_", extra="ignore")

    # дефолты CLI
    verify_order: int = Field(200, ge=1)
    scan_n_max: int = Field(500, ge=0)
    expand_order: int = Field(20, ge=1)
    violations_cap: int = Field(20, ge=1)

    # пороги переключения алгоритмов (на результат не влияют)
    schoolbook_cutoff: int = Field(48, ge=1, description="min nonzero terms for packed multiplication")
    newton_cutoff: int = Field(128, ge=1, description="min prec for Newton inversion")

    # окно асимптотической сверки c(n)
    asymptotic_n_min: int = Field(100, ge=1)
    asymptotic_n_max: int = Field(2000, ge=1)
    asymptotic_cos_cutoff: float = Field(0.1, ge=0, lt=1)
    asymptotic_agreement: float = Field(0.99, gt=0, le=1)

    catalogs_dir: Optional[Path] = None
    contracts_dir: Optional[Path] = None
    validate_output: bool = True
    log_level: LogLevel = "WARNING"

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, v: object) -> object:
        return v.upper() if isinstance(v, str) else v


@lru_cache(maxsize=1)
def get_settings() -> EngineSettings:
    return EngineSettings()


def repo_root(marker: str) -> Path:
    """
    Ищем корень репозитория по наличию каталога `marker` (напр. "data/catalogs").
    Если не нашли: текущая рабочая директория.
    """
    here = Path(__file__).resolve()
    for p in [here] + list(here.parents):
        if (p / marker).exists():
            return p
    return Path.cwd()
