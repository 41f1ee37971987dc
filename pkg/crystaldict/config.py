from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Tuple

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

BASE_DIR = Path(__file__).resolve().parents[1]
DEFAULT_SETTINGS_PATH = BASE_DIR / "config" / "settings.yaml"

# Environment override for the character and graph size bounds.
MAX_N_ENV = "CRYSTAL_MAX_N"

DEFAULT_BOUNDS = {
    "partitions_max_n": 30,
    "multipartitions_max_n": 12,
    "character_max_n": 12,
    "graph_max_n": 8,
}


@dataclass
class AppConfig:
    settings: Dict[str, Any]

    def get(self, *keys: str, default: Any | None = None) -> Any:
        current: Any = self.settings
        for key in keys:
            if not isinstance(current, dict) or key not in current:
                return default
            current = current[key]
        return current

    def bound(self, name: str) -> int:
        value = int(self.get("bounds", name, default=DEFAULT_BOUNDS[name]))
        if name in ("character_max_n", "graph_max_n"):
            override = _env_max_n()
            if override is not None and override > value:
                logger.info("%s raised from %d to %d by %s", name, value, override, MAX_N_ENV)
                value = override
        return value

    @property
    def partitions_max_n(self) -> int:
        return self.bound("partitions_max_n")

    @property
    def multipartitions_max_n(self) -> int:
        return self.bound("multipartitions_max_n")

    @property
    def character_max_n(self) -> int:
        return self.bound("character_max_n")

    @property
    def graph_max_n(self) -> int:
        return self.bound("graph_max_n")

    @property
    def test_weights(self) -> List[List[int]]:
        return self.get("test_weights", default=[[0], [0, 0], [1, 0], [2, 0], [1, 0, 0]])

    def selfcheck_level(self, level: str) -> Dict[str, Any]:
        defaults: Dict[str, Any] = {
            "contents": [-3, 3],
            "max_n": 6,
            "signature_length": 10,
            "graph_max_n": 4,
            "character_max_n": 6,
        }
        defaults.update(self.get("selfcheck", level, default={}) or {})
        return defaults

    @property
    def log_level(self) -> str:
        return str(self.get("logging", "level", default="WARNING")).upper()

    @property
    def log_format(self) -> str:
        return self.get(
            "logging", "format", default="%(asctime)s %(levelname)s %(name)s: %(message)s"
        )


def _env_max_n() -> int | None:
    raw = os.getenv(MAX_N_ENV)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning("ignoring non-integer %s=%r", MAX_N_ENV, raw)
        return None


def load_config(path: Path | None = None) -> AppConfig:
    load_dotenv(BASE_DIR / ".env")
    config_path = path or DEFAULT_SETTINGS_PATH
    if not config_path.exists():
        return AppConfig(settings={})
    with config_path.open("r", encoding="utf-8") as file:
        data = yaml.safe_load(file) or {}
    return AppConfig(settings=data)


@lru_cache(maxsize=1)
def get_config() -> AppConfig:
    return load_config()


def parse_contents_range(text: str) -> Tuple[int, int]:
    """Parse ``lo..hi`` into an inclusive integer range."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"expected lo..hi, got {text!r}")
    low, high = int(lo), int(hi)
    if low > high:
        raise ValueError(f"empty contents range {text!r}")
    return low, high
