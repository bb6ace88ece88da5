"""Configuration loader utility"""

import os
import yaml
from pathlib import Path
from typing import Dict, Any

DEFAULT_CACHE_ENV = "LATIN_CENSUS_CACHE"


def load_config(config_path: str = None) -> Dict[str, Any]:
    """
    Load configuration from YAML file.

    Args:
        config_path: Path to config file (defaults to config/config.yaml)

    Returns:
        Configuration dictionary
    """
    if config_path is None:
        # Default to config/config.yaml relative to project root
        config_path = Path(__file__).parent.parent.parent / "config" / "config.yaml"
    else:
        config_path = Path(config_path)

    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, 'r', encoding='utf-8') as f:
        config = yaml.safe_load(f) or {}

    # Environment overrides
    cache_override = os.getenv(DEFAULT_CACHE_ENV)
    if cache_override:
        config.setdefault('census', {})['memo_cache'] = cache_override

    return config


def get_census_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Extract census-run configuration (workers, memo cache, checkpoints)"""
    return config.get('census', {})


def get_budget_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Extract search budgets (largest n allowed per exhaustive operation)"""
    return config.get('budgets', {})


def get_output_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Extract report output settings"""
    return config.get('output', {})


def get_permanent_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Extract permanent-formula settings"""
    return config.get('permanent', {})
