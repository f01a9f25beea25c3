# utils/file_utils.py
"""
File utility functions for graph, query, result and report documents.
"""

import csv
import io
import json
import logging
import os
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from graph_core.errors import GraphIOError, ParseError

logger = logging.getLogger(__name__)


class FileUtils:
    """Utility functions for file operations."""

    @staticmethod
    def read_json(filepath: str) -> Any:
        """
        Load a JSON document.

        Args:
            filepath: Path to the JSON file

        Returns:
            Decoded document

        Raises:
            GraphIOError: file missing or unreadable
            ParseError: malformed JSON or invalid UTF-8, with line (and column for JSON)
        """
        text = FileUtils.read_text(filepath)
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, path=str(filepath), line=e.lineno, column=e.colno) from e

    @staticmethod
    def read_text(filepath: str) -> str:
        """
        Read a UTF-8 text file.

        Raises:
            GraphIOError: file missing or unreadable
            ParseError: bytes that are not UTF-8, with the line they sit on
        """
        try:
            with open(filepath, 'rb') as f:
                raw = f.read()
        except OSError as e:
            raise GraphIOError(f"cannot read {filepath}: {e}") from e
        try:
            return raw.decode('utf-8')
        except UnicodeDecodeError as e:
            line = raw.count(b'\n', 0, e.start) + 1
            raise ParseError(f"invalid UTF-8 byte 0x{raw[e.start]:02x}", path=str(filepath), line=line) from e

    @staticmethod
    def dumps_json(document: Any) -> str:
        """Deterministic JSON text: fixed indentation, insertion-ordered keys, trailing newline."""
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def write_json(document: Any, filepath: str) -> None:
        """
        Save a JSON document.

        Raises:
            GraphIOError: directory or file cannot be written
        """
        FileUtils.write_text(FileUtils.dumps_json(document), filepath)
        logger.debug(f"[FileUtils] Saved JSON document to: {filepath}")

    @staticmethod
    def write_text(text: str, filepath: str) -> None:
        try:
            FileUtils.ensure_directory(os.path.dirname(os.path.abspath(filepath)))
            with open(filepath, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
        except OSError as e:
            raise GraphIOError(f"cannot write {filepath}: {e}") from e

    @staticmethod
    def write_table(header: Sequence[str], rows: Iterable[Sequence[Any]], filepath: str,
                    delimiter: str = '\t') -> None:
        """
        Save a delimiter-separated table with a header row.

        Raises:
            GraphIOError: file cannot be written
        """
        try:
            FileUtils.ensure_directory(os.path.dirname(os.path.abspath(filepath)))
            with open(filepath, 'w', encoding='utf-8', newline='') as f:
                writer = csv.writer(f, delimiter=delimiter, lineterminator='\n')
                writer.writerow(header)
                writer.writerows(rows)
        except OSError as e:
            raise GraphIOError(f"cannot write {filepath}: {e}") from e
        logger.debug(f"[FileUtils] Saved table to: {filepath}")

    @staticmethod
    def read_rows(filepath: str, delimiter: str = ',') -> List[Tuple[int, List[str]]]:
        """
        Read a delimiter-separated file, skipping blank lines and '#' comments.

        Returns:
            (line number in the file, row) pairs

        Raises:
            GraphIOError: file missing or unreadable
            ParseError: bytes that are not UTF-8
        """
        reader = csv.reader(io.StringIO(FileUtils.read_text(filepath), newline=''), delimiter=delimiter)
        return [(reader.line_num, row) for row in reader
                if row and not row[0].lstrip().startswith('#')]

    @staticmethod
    def ensure_directory(directory: str) -> None:
        """Ensure a directory exists, create if it doesn't."""
        if directory:
            os.makedirs(directory, exist_ok=True)

    @staticmethod
    def sibling_path(filepath: str, suffix: str) -> str:
        """filepath with its extension replaced by suffix (e.g. '.tsv')."""
        root, _ = os.path.splitext(filepath)
        return root + suffix

    @staticmethod
    def stem(filepath: Optional[str]) -> str:
        if not filepath:
            return ""
        return os.path.splitext(os.path.basename(filepath))[0]
