"""Archive export and import as JSON Lines."""

import logging
from typing import Any, List, Mapping, Optional

from ..file_operations import ArtifactWriterFactory, read_jsonl
from .grid_archive import Elite

logger = logging.getLogger(__name__)


def export_archive(
    elites: List[Elite], path: str, meta: Optional[Mapping[str, Any]] = None
) -> None:
    """Write one record per elite after a metadata line."""
    writer = ArtifactWriterFactory.create_jsonl_writer()
    writer.write([elite.to_dict() for elite in elites], path, meta)


def load_archive(path: str) -> List[Elite]:
    """Read elites back from an exported archive."""
    elites = [Elite.from_dict(record) for record in read_jsonl(path)]
    logger.info("Loaded %d elites from %s", len(elites), path)
    return elites
