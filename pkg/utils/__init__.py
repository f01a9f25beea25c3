# Utils Module
# Shared file helpers, settings loading and command implementations

from .file_utils import FileUtils
from .settings import load_settings

__all__ = ['FileUtils', 'load_settings']
