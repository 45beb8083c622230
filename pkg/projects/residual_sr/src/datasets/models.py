"""Dataset and transform-record models."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import DatasetError


@dataclass(frozen=True)
class TransformRecord:
    """One applied column transform and the parameters needed to undo it.

    Attributes:
        spec: ``delog10``, ``log10`` or ``minmax01``
        column: Column name the transform applied to
        params: ``(min, max)`` for minmax01, empty otherwise
    """

    spec: str
    column: str
    params: Tuple[float, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"spec": self.spec, "column": self.column, "params": list(self.params)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TransformRecord":
        return cls(
            spec=str(data["spec"]),
            column=str(data["column"]),
            params=tuple(float(p) for p in data.get("params", ())),
        )


@dataclass(frozen=True)
class Dataset:
    """Observations ``(x, y)`` with optional per-row subset labels.

    Attributes:
        inputs: ``(n, d)`` float array
        targets: ``(n,)`` float array
        labels: Optional ``(n,)`` array of subset tags such as ``base``/``noise``
        input_names: Column names of the inputs
        target_name: Column name of the target
        provenance: Generator spec or file path
        transforms: Transform records in application order
    """

    inputs: np.ndarray
    targets: np.ndarray
    labels: Optional[np.ndarray] = None
    input_names: Tuple[str, ...] = ()
    target_name: str = "y"
    provenance: Dict[str, Any] = field(default_factory=dict)
    transforms: Tuple[TransformRecord, ...] = ()

    def __post_init__(self) -> None:
        """Coerce arrays and check shapes.

        Raises:
            DatasetError: If the dataset is empty or shapes disagree
        """
        inputs = np.asarray(self.inputs, dtype=float)
        if inputs.ndim == 1:
            inputs = inputs.reshape(-1, 1)
        targets = np.asarray(self.targets, dtype=float).reshape(-1)
        if inputs.shape[0] == 0 or targets.shape[0] == 0:
            raise DatasetError("Dataset must contain at least one observation")
        if inputs.shape[0] != targets.shape[0]:
            raise DatasetError(
                f"Inputs have {inputs.shape[0]} rows but targets have "
                f"{targets.shape[0]}"
            )
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "targets", targets)
        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=str).reshape(-1)
            if labels.shape[0] != targets.shape[0]:
                raise DatasetError("Labels must cover every row")
            object.__setattr__(self, "labels", labels)
        names = tuple(self.input_names) or tuple(
            f"x{i}" for i in range(inputs.shape[1])
        )
        if len(names) != inputs.shape[1]:
            raise DatasetError("input_names must name every input column")
        object.__setattr__(self, "input_names", names)
        object.__setattr__(self, "transforms", tuple(self.transforms))

    @property
    def n(self) -> int:
        """Number of observations."""
        return int(self.targets.shape[0])

    @property
    def d(self) -> int:
        """Input dimension."""
        return int(self.inputs.shape[1])

    @property
    def label_names(self) -> List[str]:
        """Distinct labels in order of first appearance."""
        if self.labels is None:
            return []
        seen: Dict[str, None] = {}
        for label in self.labels:
            seen.setdefault(str(label), None)
        return list(seen)

    @property
    def column_names(self) -> Tuple[str, ...]:
        return self.input_names + (self.target_name,)

    def subset(self, label: str) -> "Dataset":
        """Rows tagged with ``label``.

        Raises:
            DatasetError: If no row carries the label
        """
        if self.labels is None:
            raise DatasetError("Dataset has no subset labels")
        mask = self.labels == label
        if not mask.any():
            raise DatasetError(f"No rows labeled {label!r}")
        return Dataset(
            inputs=self.inputs[mask],
            targets=self.targets[mask],
            labels=self.labels[mask],
            input_names=self.input_names,
            target_name=self.target_name,
            provenance={**self.provenance, "subset": label},
            transforms=self.transforms,
        )

    def column(self, name: str) -> np.ndarray:
        """Copy of one column by name."""
        if name == self.target_name:
            return self.targets.copy()
        try:
            return self.inputs[:, self.input_names.index(name)].copy()
        except ValueError as exc:
            raise DatasetError(f"Unknown column {name!r}") from exc

    def with_columns(
        self, replacements: Dict[str, np.ndarray], records: Sequence[TransformRecord]
    ) -> "Dataset":
        """Copy with some columns replaced and transform records appended."""
        inputs = self.inputs.copy()
        targets = self.targets.copy()
        for name, values in replacements.items():
            if name == self.target_name:
                targets = np.asarray(values, dtype=float)
            else:
                inputs[:, self.input_names.index(name)] = values
        return Dataset(
            inputs=inputs,
            targets=targets,
            labels=self.labels,
            input_names=self.input_names,
            target_name=self.target_name,
            provenance=self.provenance,
            transforms=self.transforms + tuple(records),
        )

    def domain_bounds(self) -> Tuple[np.ndarray, np.ndarray]:
        """Per-input-column minimum and maximum."""
        return self.inputs.min(axis=0), self.inputs.max(axis=0)
