"""Atomic artifact writers and readers."""

from .writers import (
    ArtifactWriter,
    ArtifactWriterFactory,
    CSVArtifactWriter,
    JSONArtifactWriter,
    JSONLArtifactWriter,
    format_meta_line,
    format_value,
    parse_meta_line,
    read_csv_rows,
    read_jsonl,
    read_meta,
)

__all__ = [
    "ArtifactWriter",
    "ArtifactWriterFactory",
    "CSVArtifactWriter",
    "JSONArtifactWriter",
    "JSONLArtifactWriter",
    "format_meta_line",
    "format_value",
    "parse_meta_line",
    "read_csv_rows",
    "read_jsonl",
    "read_meta",
]
