"""
Run configuration for tvgnet.

Precedence, lowest to highest: dataclass defaults, configuration file
(YAML or key=value), ``TVGNET_*`` environment variables, command-line flags.
"""
import logging
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

import yaml

from .errors import ConfigError

logger = logging.getLogger(__name__)

INPUT_FORMATS = ("canonical", "snap")
WEIGHT_EVENT_TIMES = ("citing", "cited")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_TRUE = ("true", "1", "yes", "on")
_FALSE = ("false", "0", "no", "off")


@dataclass
class RunConfig:
    """Settings for one reproducible pipeline run."""

    # Inputs
    inputs: List[Path] = field(default_factory=list)
    input_format: str = "canonical"

    # Network construction
    count_self_citations: bool = True
    weight_event_time: str = "citing"
    threshold: int = 0

    # Snapshots
    step: int = 365
    community_step: int = 182
    cumulative: bool = True

    # Community detection
    resolution: float = 1.0
    anchor: int = 0
    weighted_modularity: bool = False
    frozen_tracking: bool = False

    # Execution and output
    workers: int = 1
    out_dir: Path = field(default_factory=lambda: Path("out"))

    # Logging
    log_level: str = "INFO"
    log_file: Optional[Path] = None

    @classmethod
    def load(cls, config_path: Optional[Union[str, Path]] = None) -> "RunConfig":
        """
        Load configuration from a file.

        Files ending in ``.yaml`` or ``.yml`` are read as YAML; anything else
        as ``key=value`` lines with ``#`` comments.

        Args:
            config_path: Optional path to the config file

        Returns:
            RunConfig instance (defaults when no path is given)

        Raises:
            ConfigError: If the file cannot be read or parsed
        """
        if config_path is None:
            return cls()

        path = Path(config_path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"Failed to load configuration from {path}: {e}") from None

        if path.suffix.lower() in (".yaml", ".yml"):
            try:
                data = yaml.safe_load(text) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Failed to parse YAML configuration {path}: {e}") from None
            if not isinstance(data, dict):
                raise ConfigError(f"Configuration {path} must be a mapping")
        else:
            data = _parse_key_values(text, path)

        config = cls()
        config.apply_overrides(data)
        return config

    def apply_overrides(self, overrides: Mapping[str, Any]) -> "RunConfig":
        """
        Apply values by field name; ``None`` values are skipped.

        Unknown keys are ignored with a warning.
        """
        known = {f.name: f for f in fields(self)}
        for key, value in overrides.items():
            if value is None:
                continue
            name = key.replace("-", "_")
            if name not in known:
                logger.warning(f"Ignoring unknown configuration key '{key}'")
                continue
            setattr(self, name, self._coerce(name, value))
        return self

    def update_from_env(self, environ: Optional[Mapping[str, str]] = None) -> "RunConfig":
        """Apply ``TVGNET_<FIELD>`` environment variables."""
        environ = os.environ if environ is None else environ
        overrides = {}
        for f in fields(self):
            env_var = f"TVGNET_{f.name.upper()}"
            if env_var in environ:
                overrides[f.name] = environ[env_var]
        return self.apply_overrides(overrides)

    def validate(self) -> None:
        """
        Validate configuration settings.

        Raises:
            ConfigError: Listing every violated constraint
        """
        errors = []

        if self.input_format not in INPUT_FORMATS:
            errors.append(f"input_format must be one of {list(INPUT_FORMATS)}")
        if self.weight_event_time not in WEIGHT_EVENT_TIMES:
            errors.append(f"weight_event_time must be one of {list(WEIGHT_EVENT_TIMES)}")
        if self.threshold < 0:
            errors.append("threshold must be non-negative")
        if self.step <= 0:
            errors.append("step must be positive")
        if self.community_step <= 0:
            errors.append("community_step must be positive")
        if self.resolution <= 0:
            errors.append("resolution must be positive")
        if self.anchor < 0:
            errors.append("anchor must be non-negative")
        if self.workers < 1:
            errors.append("workers must be at least 1")
        if self.log_level.upper() not in LOG_LEVELS:
            errors.append(f"log_level must be one of: {list(LOG_LEVELS)}")

        if errors:
            raise ConfigError("Configuration validation failed: " + "; ".join(errors))

    def to_dict(self) -> Dict[str, Any]:
        """Plain representation with paths as strings."""
        data: Dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, Path):
                value = str(value)
            elif isinstance(value, list):
                value = [str(item) if isinstance(item, Path) else item for item in value]
            data[f.name] = value
        return data

    def to_yaml(self) -> str:
        """Render the configuration as YAML."""
        return yaml.safe_dump(self.to_dict(), default_flow_style=False, sort_keys=True)

    def save(self, config_path: Union[str, Path]) -> Path:
        """Write the configuration as YAML."""
        path = Path(config_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_yaml(), encoding="utf-8")
        return path

    def _coerce(self, name: str, value: Any) -> Any:
        """Convert file/env/flag values to the field's type."""
        default = getattr(type(self)(), name)
        try:
            if name == "inputs":
                if isinstance(value, (str, Path)):
                    value = [part for part in str(value).split(",") if part.strip()]
                return [Path(str(item).strip()) for item in value]
            if name in ("out_dir", "log_file"):
                return Path(value)
            if isinstance(default, bool):
                return _to_bool(value)
            if isinstance(default, int):
                if isinstance(value, float) and not value.is_integer():
                    raise ValueError(f"expected an integer, got {value}")
                return int(value)
            if isinstance(default, float):
                return float(value)
            return str(value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid value for '{name}': {value!r} ({e})") from None

    def __repr__(self) -> str:
        return (f"RunConfig(format='{self.input_format}', threshold={self.threshold}, "
                f"step={self.step}, cumulative={self.cumulative}, resolution={self.resolution})")


def _to_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise ValueError(f"expected a boolean, got {value!r}")


def _parse_key_values(text: str, path: Path) -> Dict[str, str]:
    data = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{line_number}: expected KEY=VALUE, got {raw.strip()!r}")
        key, value = line.split("=", 1)
        data[key.strip()] = value.strip()
    return data


# Convenience functions
def load_config(config_path: Optional[Union[str, Path]] = None,
                overrides: Optional[Mapping[str, Any]] = None,
                use_env: bool = True) -> RunConfig:
    """
    Load, override and validate a configuration.

    Args:
        config_path: Optional configuration file
        overrides: Flag values applied last (``None`` entries are skipped)
        use_env: Apply ``TVGNET_*`` environment variables

    Returns:
        Validated RunConfig
    """
    config = RunConfig.load(config_path)
    if use_env:
        config.update_from_env()
    if overrides:
        config.apply_overrides(overrides)
    config.validate()
    return config


def get_config_template() -> str:
    """
    Get a commented YAML template for a configuration file.

    Returns:
        YAML configuration template
    """
    template = """
# tvgnet run configuration
# Flags given on the command line override these values.

# Inputs
inputs: []                        # corpus files, or network.tvg for analysis commands
input_format: "canonical"         # canonical | snap (citations file first, metadata second)

# Network construction
count_self_citations: true
weight_event_time: "citing"       # citing | cited
threshold: 0                      # keep edges with strength strictly above this value

# Snapshots (days)
step: 365                         # metric series step
community_step: 182               # community tracking step
cumulative: true                  # footprints over [lifetime start, window end)

# Community detection
resolution: 1.0
anchor: 0                         # window index where tracking starts
weighted_modularity: false
frozen_tracking: false            # re-measure the anchor community instead of re-detecting

# Execution and output
workers: 1
out_dir: "out"

# Logging
log_level: "INFO"                 # DEBUG, INFO, WARNING, ERROR, CRITICAL
"""
    return template.strip() + "\n"
