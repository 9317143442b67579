"""Settings from config/settings.yaml, overridable through the environment."""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = "config/settings.yaml"


@dataclass(frozen=True)
class Settings:
    witness_limit: int = 16
    path_bound: int = 4
    max_objects: int = 4
    max_morphisms: int = 12
    seed: int = 0
    suite_counts: dict = field(
        default_factory=lambda: {"transfer": 500, "spans": 200, "fusion": 100, "monad": 50}
    )
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Read settings from YAML, then apply SPANEQ_* environment overrides.

    A missing file falls back to the built-in defaults.
    """
    load_dotenv()
    path = Path(config_path or os.getenv("SPANEQ_SETTINGS", DEFAULT_SETTINGS_PATH))
    raw: dict = {}
    if path.exists():
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    else:
        logger.debug(f"Settings file not found: {path}, using defaults")

    defaults = Settings()
    checks = raw.get("checks", {})
    search = raw.get("search", {})
    suites = dict(raw.get("suites", {}))
    log = raw.get("logging", {})
    seed = suites.pop("seed", defaults.seed)
    counts = {**defaults.suite_counts, **suites}

    return Settings(
        witness_limit=int(
            os.getenv("SPANEQ_WITNESS_LIMIT", checks.get("witness_limit", defaults.witness_limit))
        ),
        path_bound=int(
            os.getenv("SPANEQ_PATH_BOUND", checks.get("path_bound", defaults.path_bound))
        ),
        max_objects=int(search.get("max_objects", defaults.max_objects)),
        max_morphisms=int(search.get("max_morphisms", defaults.max_morphisms)),
        seed=int(seed),
        suite_counts=counts,
        log_level=os.getenv("SPANEQ_LOG_LEVEL", log.get("level", defaults.log_level)).upper(),
        log_format=log.get("format", defaults.log_format),
    )
