"""Artifact writing with atomic operations and metadata headers.

Every artifact starts with a metadata header so it can be traced back to
the run configuration: ``# config_hash=<hash> seed=<seed>`` for CSV files,
and a ``{"meta": {...}}`` first line for JSON Lines files.
"""

import csv
import io
import json
import logging
import os
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

logger = logging.getLogger(__name__)


def format_meta_line(meta: Mapping[str, Any]) -> str:
    """CSV metadata header, keys in the given order."""
    return "# " + " ".join(f"{key}={value}" for key, value in meta.items())


def parse_meta_line(line: str) -> Dict[str, str]:
    """Inverse of ``format_meta_line``; returns {} for non-header lines."""
    if not line.startswith("#"):
        return {}
    pairs = (item.split("=", 1) for item in line[1:].split() if "=" in item)
    return {key: value for key, value in pairs}


def format_value(value: Any) -> str:
    """Exact, locale-free text for CSV cells."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


class ArtifactWriter(ABC):
    """Abstract base class for artifact writers."""

    @abstractmethod
    def render(self, rows: Sequence[Any], meta: Mapping[str, Any]) -> str:
        """Render rows and metadata to file text."""
        raise NotImplementedError

    def write(
        self, rows: Sequence[Any], output_path: str, meta: Optional[Mapping] = None
    ) -> None:
        """Write rows to ``output_path`` atomically.

        Args:
            rows: Records to write
            output_path: Destination file
            meta: Metadata for the header line

        Raises:
            OSError: If file operations fail
        """
        logger.debug("Writing %d rows to %s", len(rows), output_path)
        directory = os.path.dirname(output_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        temp_path = f"{output_path}.tmp"
        try:
            with open(temp_path, "w", encoding="utf-8", newline="") as handle:
                handle.write(self.render(rows, meta or {}))
            os.replace(temp_path, output_path)
        except OSError as exc:
            logger.error("Failed to write %s: %s", output_path, exc)
            self._cleanup_temp_file(temp_path)
            raise
        logger.info("Wrote %d rows to %s", len(rows), output_path)

    @staticmethod
    def _cleanup_temp_file(temp_path: str) -> None:
        if os.path.exists(temp_path):
            try:
                os.remove(temp_path)
            except OSError:
                pass


class JSONLArtifactWriter(ArtifactWriter):
    """JSON Lines writer; the first line carries the metadata."""

    def render(self, rows: Sequence[Mapping[str, Any]], meta: Mapping[str, Any]) -> str:
        lines = [json.dumps({"meta": dict(meta)}, separators=(",", ":"))]
        lines.extend(json.dumps(row, separators=(",", ":")) for row in rows)
        return "\n".join(lines) + "\n"


class CSVArtifactWriter(ArtifactWriter):
    """CSV writer with a comment header line and a column header row."""

    def __init__(self, columns: Sequence[str]):
        self.columns = list(columns)

    def render(self, rows: Sequence[Sequence[Any]], meta: Mapping[str, Any]) -> str:
        buffer = io.StringIO()
        if meta:
            buffer.write(format_meta_line(meta) + "\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
        return buffer.getvalue()


class JSONArtifactWriter(ArtifactWriter):
    """Single JSON document ``{"meta": ..., "records": [...]}``."""

    def render(self, rows: Sequence[Any], meta: Mapping[str, Any]) -> str:
        return json.dumps({"meta": dict(meta), "records": list(rows)}, indent=2) + "\n"


def read_jsonl(path: str) -> List[Dict[str, Any]]:
    """Records of a JSON Lines artifact, without the metadata line."""
    records = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            if not line.strip():
                continue
            record = json.loads(line)
            if set(record) == {"meta"}:
                continue
            records.append(record)
    return records


def read_csv_rows(path: str) -> List[Dict[str, str]]:
    """Rows of a CSV artifact as dicts, skipping metadata lines."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        lines: Iterable[str] = [line for line in handle if not line.startswith("#")]
        return list(csv.DictReader(lines))


def read_meta(path: str) -> Dict[str, Any]:
    """Metadata of a CSV, JSONL or JSON artifact, {} if absent."""
    with open(path, "r", encoding="utf-8") as handle:
        first = handle.readline().strip()
        if first.startswith("#"):
            return parse_meta_line(first)
        if not first.startswith("{"):
            return {}
        try:
            record = json.loads(first)
        except json.JSONDecodeError:
            # Multi-line JSON document
            handle.seek(0)
            record = json.load(handle)
    if isinstance(record, dict) and isinstance(record.get("meta"), dict):
        return record["meta"]
    return {}


class ArtifactWriterFactory:
    """Factory for creating artifact writers."""

    @staticmethod
    def create_jsonl_writer() -> JSONLArtifactWriter:
        return JSONLArtifactWriter()

    @staticmethod
    def create_csv_writer(columns: Sequence[str]) -> CSVArtifactWriter:
        return CSVArtifactWriter(columns)

    @staticmethod
    def create_json_writer() -> JSONArtifactWriter:
        return JSONArtifactWriter()
