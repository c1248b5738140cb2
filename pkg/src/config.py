"""Application configuration."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

# Project root is the parent of `src/`
PROJECT_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = PROJECT_ROOT / "data"
BASES_DIR = DATA_DIR / "bases"
OUTPUT_DIR = PROJECT_ROOT / "output"

CONFIG_FILE = PROJECT_ROOT / ".kic_config.json"

DEFAULT_CONFIG = {
    "max_nodes": 100_000_000,
    "max_seconds": 60.0,
    "workers": 1,
    "symmetry": False,
    "output_dir": str(OUTPUT_DIR),
    "log_level": "WARNING",
}

# Environment variable overrides
ENV_OVERRIDES = {
    "KIC_MAX_NODES": "max_nodes",
    "KIC_MAX_SECONDS": "max_seconds",
    "KIC_WORKERS": "workers",
    "KIC_LOG_LEVEL": "log_level",
}


def _coerce(key: str, value):
    """Coerce a raw value to the type of the key's default."""
    default = DEFAULT_CONFIG.get(key)
    if isinstance(default, bool):
        if isinstance(value, str):
            return value.strip().lower() in ("1", "true", "yes", "on")
        return bool(value)
    if isinstance(default, int):
        return int(value)
    if isinstance(default, float):
        return float(value)
    return value


def load_config(config_file: Path | None = None) -> dict:
    """Load configuration from file, falling back to defaults."""
    path = config_file or CONFIG_FILE
    config = DEFAULT_CONFIG.copy()
    if path.exists():
        with open(path) as f:
            stored = json.load(f)
        config.update({k: _coerce(k, v) for k, v in stored.items()})
    for env_name, key in ENV_OVERRIDES.items():
        if value := os.environ.get(env_name):
            config[key] = _coerce(key, value)
    return config


def save_config(config: dict, config_file: Path | None = None) -> None:
    """Persist configuration to disk."""
    with open(config_file or CONFIG_FILE, "w") as f:
        json.dump(config, f, indent=2)


def get_config_value(key: str, config_file: Path | None = None):
    """Get a single config value."""
    return load_config(config_file).get(key)


def set_config_value(key: str, value: str, config_file: Path | None = None) -> None:
    """Set a single config value and persist."""
    if key not in DEFAULT_CONFIG:
        raise KeyError(f"Unknown config key: {key}")
    config = load_config(config_file)
    config[key] = _coerce(key, value)
    save_config(config, config_file)


def default_budget(config: dict | None = None):
    """Build the per-query search budget from configuration."""
    from src.solver.search import SearchBudget

    cfg = config or load_config()
    return SearchBudget(max_nodes=cfg["max_nodes"], max_seconds=cfg["max_seconds"])


def configure_logging(level: str | int = "WARNING") -> None:
    """Route package logging through rich on standard error."""
    root = logging.getLogger("src")
    root.setLevel(level if isinstance(level, int) else level.upper())
    if not any(isinstance(h, RichHandler) for h in root.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=False,
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)
