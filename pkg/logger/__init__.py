# Logger Module
# Structured logging for the matching engine and its tools

from .log_manager import LogManager, SmartFormatter

__all__ = ['LogManager', 'SmartFormatter']
