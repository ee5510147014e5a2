# betarec/config.py
"""
Environment-driven settings for betarec.

Values come from BETAREC_* environment variables or a .env file at the
repository root. Caps are read once and exposed through betarec.limits.
"""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = Path(__file__).resolve().parents[1]


class Settings(BaseSettings):
    refine_cap: int = 1_000_000
    orbit_cap: int = 10_000
    expansion_cap: int = 10_000
    complement_cap: int = 1_000_000
    converter_cap: int = 10_000
    kernel_max_k: int = 32
    kernel_max_classes: int = 64
    render_budget: int = 2_000_000
    render_workers: int = 1
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="BETAREC_",
        env_file=BASE_DIR / ".env",
        extra="ignore",
    )


settings = Settings()
