"""Descriptor-box queries over an exported archive."""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..archive import Elite
from ..datasets import TransformRecord, relation_from_normalized
from ..datasets.astronomy import affine_coefficients
from ..expression import to_infix, to_text

logger = logging.getLogger(__name__)

QUERY_COLUMNS = (
    "rank",
    "fitness",
    "loss",
    "out_cluster",
    "rep_power",
    "trans_count",
    "expr",
    "infix",
    "weights",
)
RELATION_COLUMNS = ("slope", "intercept")


@dataclass(frozen=True)
class QueryBox:
    """Inclusive descriptor ranges; ``clusters=None`` admits every cluster."""

    rep_range: Tuple[int, int]
    trans_range: Tuple[int, int]
    clusters: Optional[Tuple[int, ...]] = None

    def contains(self, elite: Elite) -> bool:
        descriptor = elite.descriptor
        return (
            self.rep_range[0] <= descriptor.rep_power <= self.rep_range[1]
            and self.trans_range[0] <= descriptor.trans_count <= self.trans_range[1]
            and (self.clusters is None or descriptor.out_cluster in self.clusters)
        )


def query_archive(elites: Sequence[Elite], box: QueryBox, top_k: int) -> List[Elite]:
    """Elites inside ``box``, best first.

    Ordered by fitness descending, then fewer nodes, then canonical text.
    """
    matches = [elite for elite in elites if box.contains(elite)]
    matches.sort(key=lambda e: (-e.fitness, e.tree.node_count, to_text(e.tree)))
    logger.info(
        "Query matched %d elites; returning %d",
        len(matches),
        min(top_k, len(matches)),
    )
    return matches[:top_k]


@dataclass(frozen=True)
class NormalizationRecords:
    """minmax01 records of the single input and the target."""

    x: TransformRecord
    y: TransformRecord

    @classmethod
    def load(cls, path: str) -> "NormalizationRecords":
        """Read a dataset transform-record file.

        Raises:
            ValueError: If minmax01 records for input or target are missing
        """
        with open(path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
        meta = document.get("meta", {})
        records = [
            TransformRecord.from_dict(item) for item in document.get("records", [])
        ]
        target = meta.get("target")
        inputs = meta.get("inputs") or []
        minmax = {r.column: r for r in records if r.spec == "minmax01"}
        if target not in minmax or not inputs or inputs[0] not in minmax:
            raise ValueError(f"{path} lacks minmax01 records for input and target")
        return cls(x=minmax[inputs[0]], y=minmax[target])


def query_rows(
    elites: Sequence[Elite], normalization: Optional[NormalizationRecords] = None
) -> List[Dict[str, Any]]:
    """Table rows for query results.

    With ``normalization``, affine elites also get the slope and intercept
    of the equivalent relation on the raw (pre-normalization) plane; other
    elites get empty cells.
    """
    rows = []
    for rank, elite in enumerate(elites, start=1):
        row: Dict[str, Any] = {
            "rank": rank,
            "fitness": elite.fitness,
            "loss": elite.loss,
            "out_cluster": elite.descriptor.out_cluster,
            "rep_power": elite.descriptor.rep_power,
            "trans_count": elite.descriptor.trans_count,
            "expr": to_text(elite.tree),
            "infix": to_infix(elite.tree),
            "weights": " ".join(repr(w) for w in elite.tree.weights),
        }
        if normalization is not None:
            coefficients = affine_coefficients(elite.tree)
            if coefficients is None:
                row.update(slope="", intercept="")
            else:
                relation = relation_from_normalized(
                    *coefficients,
                    x_bounds=normalization.x.params,
                    y_bounds=normalization.y.params,
                )
                row.update(slope=relation.slope, intercept=relation.intercept)
        rows.append(row)
    return rows

