# logger/log_manager.py
"""
Structured logging manager for the matching engine and its tools.
"""

import logging
import os
import re
from typing import Dict

LOG_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
LOG_FILE = "logs/bbgraph.log"

_QUERY_TAG = re.compile(r'\[QRY:([^\]]+)\]')
_MODULES = ('graph_core', 'matcher', 'baselines', 'benchmark', 'graph_io')


class SmartFormatter(logging.Formatter):
    """Formatter that colors levels, package names and query tags."""

    def __init__(self, fmt: str = LOG_FORMAT, use_colors: bool = True):
        super().__init__(fmt)
        self.use_colors = use_colors

        if use_colors:
            self.colors = {
                # Module colors
                'graph_core': '\033[36m',  # Cyan
                'matcher': '\033[35m',     # Magenta
                'baselines': '\033[33m',   # Yellow
                'benchmark': '\033[32m',   # Green
                'graph_io': '\033[37m',    # White
                'query': '\033[34m',       # Blue

                # Level colors
                'ERROR': '\033[91m',     # Bright Red
                'WARNING': '\033[93m',   # Bright Yellow
                'INFO': '\033[94m',      # Bright Blue
                'DEBUG': '\033[90m',     # Gray

                'reset': '\033[0m'
            }
        else:
            # No colors - use prefixes instead
            self.colors = {
                'graph_core': '[GRF]',
                'matcher': '[BBG]',
                'baselines': '[REF]',
                'benchmark': '[BEN]',
                'graph_io': '[IO]',
                'query': '',
                'ERROR': '[ERR]',
                'WARNING': '[WARN]',
                'INFO': '[INFO]',
                'DEBUG': '[DBG]',
                'reset': ''
            }

    def _paint(self, text: str, old: str, key: str) -> str:
        color = self.colors[key]
        if self.use_colors:
            return text.replace(old, f'{color}{old}{self.colors["reset"]}', 1)
        return text.replace(old, f'{color}{old}', 1)

    def format(self, record):
        query_id = getattr(record, 'query_id', None)
        if query_id is None:
            match = _QUERY_TAG.search(record.getMessage())
            if match:
                query_id = match.group(1)

        formatted = super().format(record)

        if query_id is not None and self.use_colors:
            formatted = self._paint(formatted, f'[QRY:{query_id}]', 'query')

        level = record.levelname
        if level in ('ERROR', 'WARNING', 'INFO', 'DEBUG'):
            formatted = self._paint(formatted, f'[{level}]', level)

        module_name = record.name.split('.')[0]
        if module_name in _MODULES:
            formatted = self._paint(formatted, f'{record.name}:', module_name)

        return formatted


class LogManager:
    """Centralized logging manager."""

    _query_loggers: Dict[str, logging.Logger] = {}

    @staticmethod
    def initialize_logger(log_to_file: bool = False, log_level: str = "INFO", use_colors: bool = False,
                          log_file: str = LOG_FILE) -> logging.Logger:
        """
        Initialize the logging system.

        Args:
            log_to_file: Whether to also log to log_file
            log_level: Logging level name
            use_colors: ANSI colors on the console instead of bracket prefixes
            log_file: File handler destination

        Returns:
            Configured logger instance
        """
        root_logger = logging.getLogger()
        root_logger.setLevel(getattr(logging, log_level.upper()))

        # Clear duplicate handlers
        if root_logger.hasHandlers():
            root_logger.handlers.clear()

        console_handler = logging.StreamHandler()
        console_handler.setFormatter(SmartFormatter(LOG_FORMAT, use_colors=use_colors))
        root_logger.addHandler(console_handler)

        # File handler (optional) - no colors in file
        if log_to_file:
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            root_logger.addHandler(file_handler)

        # numba's compiler chatter drowns everything at DEBUG
        logging.getLogger("numba").setLevel(logging.WARNING)

        return logging.getLogger("Main")

    @staticmethod
    def get_query_logger(query_id: str) -> logging.Logger:
        if query_id not in LogManager._query_loggers:
            LogManager._query_loggers[query_id] = logging.getLogger(f"benchmark.query.{query_id}")
        return LogManager._query_loggers[query_id]

    @staticmethod
    def log_query_event(query_id: str, level: str, message: str, **kwargs):
        """
        Log a per-query event tagged [QRY:<id>].

        Args:
            query_id: Workload query identifier
            level: Log level (DEBUG, INFO, WARNING, ERROR)
            message: Log message
            **kwargs: Additional context attached to the record
        """
        logger = LogManager.get_query_logger(query_id)
        levelno = getattr(logging, level.upper())
        if not logger.isEnabledFor(levelno):
            return

        record = logger.makeRecord(
            logger.name, levelno, "", 0, f"[QRY:{query_id}] {message}", (), None
        )
        record.query_id = query_id
        for key, value in kwargs.items():
            setattr(record, key, value)

        logger.handle(record)
