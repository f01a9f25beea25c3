# utils/settings.py
"""
Program settings: JSON file -> ProgramSettings, defaults for absent keys.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from data_models.models import ProgramSettings
from graph_core.errors import GraphIOError, ValidationError

from .file_utils import FileUtils

logger = logging.getLogger(__name__)

SETTINGS_FILE = Path("config/settings.json")
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def load_settings(path: Optional[Union[str, Path]] = None) -> ProgramSettings:
    """
    Load program settings.

    Args:
        path: explicit settings file; None reads config/settings.json if present

    Returns:
        ProgramSettings with defaults filled in

    Raises:
        GraphIOError: an explicit path does not exist
        ParseError: malformed JSON
        ValidationError: unknown keys or wrong shapes
    """
    settings_file = Path(path) if path is not None else SETTINGS_FILE
    if not settings_file.exists():
        if path is not None:
            raise GraphIOError(f"Settings file not found: {settings_file}")
        logger.debug(f"No settings file at {settings_file}, using defaults")
        return ProgramSettings()

    data = FileUtils.read_json(str(settings_file))
    if not isinstance(data, dict):
        raise ValidationError(f"{settings_file}: settings must be a JSON object", "settings")
    try:
        settings = ProgramSettings.from_dict(data)
    except TypeError as e:
        raise ValidationError(f"{settings_file}: {e}", "settings") from e
    _validate(settings, settings_file)
    logger.debug(f"Loaded settings from {settings_file}")
    return settings


def _validate(settings: ProgramSettings, settings_file: Path) -> None:
    """Reject values the enums and level names would only refuse at first use."""
    if not isinstance(settings.log_level, str) or settings.log_level.upper() not in _LOG_LEVELS:
        raise ValidationError(f"{settings_file}: log_level must be one of {', '.join(_LOG_LEVELS)}, "
                              f"got {settings.log_level!r}", "settings")
    try:
        settings.search_config()
    except (ValidationError, TypeError) as e:
        raise ValidationError(f"{settings_file}: {e}", "settings") from e

