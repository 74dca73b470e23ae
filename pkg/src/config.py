"""Configuration settings for bolkit."""

from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from BOLKIT_* environment variables."""

    # Budgets
    budget: Optional[int] = None
    max_cosets: int = 1_000_000
    closure_budget: int = 10_000_000
    search_node_budget: int = 50_000_000
    folder_check_budget: int = 100_000

    # Database
    database_url: str = "sqlite:///data/catalog.db"

    # Paths
    catalog16_path: Optional[Path] = None

    # Environment
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_prefix="BOLKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @property
    def effective_max_cosets(self) -> int:
        return self.budget or self.max_cosets

    @property
    def effective_closure_budget(self) -> int:
        return self.budget or self.closure_budget

    @property
    def effective_search_node_budget(self) -> int:
        return self.budget or self.search_node_budget


settings = Settings()
