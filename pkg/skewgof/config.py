# config.py
import os
import json
import logging
from dataclasses import dataclass, asdict, fields
from typing import Dict, Any, Optional, Union
from pathlib import Path

from .core.models.enums import OutputFormat
from .exceptions import GofConfigurationError, GofFileError

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20170419


@dataclass
class GofConfig:
    """Configuration class for the skewgof package"""
    # Monte Carlo
    seed: int = DEFAULT_SEED
    replicates: int = 10_000
    level: float = 0.05
    workers: int = 1

    # Comparison tolerances
    table_tolerance: float = 5e-4
    eigen_tolerance: float = 5e-4

    # Numerics
    quad_epsabs: float = 1e-10
    quad_epsrel: float = 1e-10
    sup_grid_points: int = 512

    # Null-table cache
    cache_dir: str = str(Path.home() / ".skewgof" / "cache")
    use_cache: bool = True

    output_format: OutputFormat = OutputFormat.TEXT

    def __post_init__(self):
        """Validate configuration after initialization"""
        if isinstance(self.output_format, str):
            try:
                self.output_format = OutputFormat(self.output_format)
            except ValueError:
                raise GofConfigurationError(
                    f"Unknown output format: {self.output_format}",
                    config_field="output_format",
                    valid_values=[f.value for f in OutputFormat]
                )
        if not isinstance(self.seed, int) or self.seed < 0:
            raise GofConfigurationError("seed must be a non-negative integer", config_field="seed")
        if self.replicates < 1:
            raise GofConfigurationError("replicates must be positive", config_field="replicates")
        if not 0.0 < self.level < 1.0:
            raise GofConfigurationError("level must lie in (0, 1)", config_field="level")
        if self.workers < 1:
            raise GofConfigurationError("workers must be at least 1", config_field="workers")
        for name in ("table_tolerance", "eigen_tolerance", "quad_epsabs", "quad_epsrel"):
            if getattr(self, name) <= 0:
                raise GofConfigurationError(f"{name} must be positive", config_field=name)
        if self.sup_grid_points < 8:
            raise GofConfigurationError("sup_grid_points must be at least 8", config_field="sup_grid_points")

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary"""
        config_dict = asdict(self)
        config_dict['output_format'] = self.output_format.value
        return config_dict

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GofConfig':
        """Create config from dictionary"""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise GofConfigurationError(
                f"Unknown configuration keys: {', '.join(unknown)}",
                config_field=unknown[0],
                valid_values=sorted(known)
            )
        return cls(**data)

    def save_to_file(self, filepath: Union[str, Path]) -> None:
        """Save configuration to JSON file"""
        filepath = Path(filepath)
        try:
            filepath.parent.mkdir(parents=True, exist_ok=True)
            with open(filepath, 'w', encoding='utf-8') as f:
                json.dump(self.to_dict(), f, indent=2)
        except OSError as e:
            raise GofFileError(f"Cannot write config: {e}", file_path=str(filepath), operation="write")

    @classmethod
    def load_from_file(cls, filepath: Union[str, Path]) -> 'GofConfig':
        """Load configuration from JSON file"""
        filepath = Path(filepath)

        if not filepath.exists():
            raise GofFileError(f"Config file not found: {filepath}", file_path=str(filepath), operation="read")

        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise GofFileError(f"Cannot read config: {e}", file_path=str(filepath), operation="read")

        return cls.from_dict(data)

    def with_overrides(self, **kwargs) -> 'GofConfig':
        """Return a copy with the non-None keyword values replaced"""
        data = self.to_dict()
        data.update({k: v for k, v in kwargs.items() if v is not None})
        return GofConfig.from_dict(data)


class ConfigManager:
    """Configuration manager for the skewgof package"""

    DEFAULT_CONFIG_DIR = Path.home() / ".skewgof"
    DEFAULT_CONFIG_FILE = "config.json"

    def __init__(self, config_dir: Optional[Union[str, Path]] = None):
        self.config_dir = Path(config_dir) if config_dir else self.DEFAULT_CONFIG_DIR
        self.config_file = self.config_dir / self.DEFAULT_CONFIG_FILE
        self._config: Optional[GofConfig] = None

    @property
    def config(self) -> GofConfig:
        """Get current configuration, file values overridden by environment"""
        if self._config is None:
            base = self.load_config()
            env = load_config_from_env()
            self._config = base.with_overrides(**env) if env else base
        return self._config

    def load_config(self) -> GofConfig:
        """Load configuration from file or create default"""
        if self.config_file.exists():
            try:
                return GofConfig.load_from_file(self.config_file)
            except (GofFileError, GofConfigurationError, TypeError) as e:
                logger.warning(f"Error loading config: {e}. Using default configuration.")
        return GofConfig()

    def save_config(self, config: Optional[GofConfig] = None) -> None:
        """Save configuration to file"""
        if config is None:
            config = self._config or GofConfig()
        config.save_to_file(self.config_file)
        self._config = config

    def set_config(self, config: GofConfig) -> None:
        """Replace the in-memory configuration without touching disk"""
        self._config = config

    def reset_config(self) -> None:
        """Drop the cached configuration so the next access reloads it"""
        self._config = None

    def get_config_path(self) -> Path:
        """Get path to configuration file"""
        return self.config_file


# Global configuration manager instance
_config_manager = ConfigManager()


def get_config() -> GofConfig:
    """Get current global configuration"""
    return _config_manager.config


def set_config(config: GofConfig) -> None:
    """Set global configuration for this process"""
    _config_manager.set_config(config)


def reset_config() -> None:
    """Reset global configuration to file and environment values"""
    _config_manager.reset_config()


def save_config(config: Optional[GofConfig] = None) -> Path:
    """Write configuration to the config file and make it current"""
    _config_manager.save_config(config)
    return _config_manager.get_config_path()


_BOOL_TRUE = ('true', '1', 'yes', 'on')

_ENV_MAPPING = {
    'SKEWGOF_SEED': ('seed', int),
    'SKEWGOF_REPLICATES': ('replicates', int),
    'SKEWGOF_WORKERS': ('workers', int),
    'SKEWGOF_CACHE_DIR': ('cache_dir', str),
    'SKEWGOF_OUTPUT_FORMAT': ('output_format', str),
    'SKEWGOF_USE_CACHE': ('use_cache', lambda v: v.lower() in _BOOL_TRUE),
}


def load_config_from_env() -> Dict[str, Any]:
    """Load configuration overrides from environment variables"""
    config_dict: Dict[str, Any] = {}
    for env_var, (config_key, convert) in _ENV_MAPPING.items():
        value = os.getenv(env_var)
        if value is None:
            continue
        try:
            config_dict[config_key] = convert(value)
        except ValueError:
            raise GofConfigurationError(
                f"Invalid value {value!r} in {env_var}",
                config_field=config_key
            )
    return config_dict
