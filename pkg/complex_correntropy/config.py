"""Experiment configuration loading.

Configs are JSON documents (YAML is accepted as well) parsed with ruamel.yaml
and validated into :class:`ExperimentConfig`. Parse and validation failures
are reported as :class:`ConfigurationError` with line or field diagnostics.
"""

from pathlib import Path
from typing import Any

from pydantic import ValidationError
from ruamel.yaml import YAML
from ruamel.yaml.error import MarkedYAMLError, YAMLError

from complex_correntropy.exceptions import ConfigurationError
from complex_correntropy.logging_config import get_logger
from complex_correntropy.models.experiment import ExperimentConfig

logger = get_logger(__name__)


def format_validation_error(error: ValidationError) -> str:
    """One ``field.path: message`` line per pydantic error."""
    lines = []
    for item in error.errors():
        field = ".".join(str(x) for x in item["loc"]) or "<root>"
        lines.append(f"  - {field}: {item['msg']}")
    return "\n".join(lines)


def read_config_document(path: str | Path) -> Any:
    """Parse a JSON/YAML document.

    Raises:
        ConfigurationError: If the file is missing, empty or syntactically invalid
    """
    path = Path(path)
    logger.debug(f"Reading config file: {path}")

    if not path.exists():
        raise ConfigurationError(
            f"Config file not found: {path}",
            f"Expected location: {path.absolute()}",
        )

    yaml = YAML(typ="safe", pure=True)
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.load(f)
    except MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "unknown position"
        raise ConfigurationError(
            f"Failed to parse config file {path} at {where}",
            e.problem or str(e),
        ) from e
    except (YAMLError, OSError, UnicodeDecodeError) as e:
        raise ConfigurationError(f"Failed to read config file {path}", str(e)) from e

    if data is None:
        raise ConfigurationError(f"Config file is empty: {path}")
    return data


def parse_experiment_config(data: Any, source: str = "<config>") -> ExperimentConfig:
    """Validate a parsed document into an ExperimentConfig.

    Raises:
        ConfigurationError: Listing every invalid field
    """
    if not isinstance(data, dict):
        raise ConfigurationError(
            f"Config {source} must be a JSON object, got {type(data).__name__}"
        )
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigurationError(
            f"Invalid experiment config {source}", format_validation_error(e)
        ) from e


def load_experiment_config(path: str | Path, seed: int | None = None) -> ExperimentConfig:
    """Load and validate an experiment config, optionally overriding its seed."""
    cfg = parse_experiment_config(read_config_document(path), str(path))
    if seed is not None:
        cfg = parse_experiment_config({**resolved_config(cfg), "seed": seed}, str(path))
    logger.info(f"Loaded experiment config {path} (seed={cfg.seed})")
    return cfg


def resolved_config(cfg: ExperimentConfig) -> dict[str, Any]:
    """JSON-ready dictionary of every config field, defaults included."""
    return cfg.model_dump(mode="json")
