"""JSON run configuration validated with pydantic.

Run semantics come only from this document; environment settings never
change search results.
"""

import hashlib
import json
import logging
from typing import Annotated, Any, Dict, List, Literal, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..archive import ArchiveBounds
from ..exceptions import ConfigValidationError
from ..expression import TreeLimits
from ..objectives import LossKind
from ..optimizers import EsConfig
from ..variation import VariationConfig

logger = logging.getLogger(__name__)

CONFIG_HASH_LENGTH = 16


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class TransformStep(_Strict):
    """One column transform applied to a CSV dataset."""

    spec: Literal["delog10", "log10", "minmax01"]
    columns: Optional[List[str]] = None
    bounds: Optional[Dict[str, Tuple[float, float]]] = None


class NguyenSpec(_Strict):
    kind: Literal["nguyen"]
    name: Union[int, str]
    n_base: int = Field(20, ge=1)
    n_noise: int = Field(20, ge=0)
    seed: int = Field(0, ge=0)


class MixtureSpec(_Strict):
    kind: Literal["mixture"]
    n: int = Field(40, ge=2)
    seed: int = Field(0, ge=0)


class CsvSpec(_Strict):
    kind: Literal["csv"]
    path: str
    x_cols: List[str] = Field(min_length=1)
    y_col: str
    label_col: str = ""
    transforms: List[TransformStep] = Field(default_factory=list)


DatasetSpec = Annotated[
    Union[NguyenSpec, MixtureSpec, CsvSpec], Field(discriminator="kind")
]


class ArchiveSpec(_Strict):
    """Archive grid and optional injected clustering."""

    clusters: int = Field(10, ge=1)
    rep_range: Tuple[int, int] = (1, 20)
    trans_range: Tuple[int, int] = (0, 4)
    assignment_path: Optional[str] = None

    @model_validator(mode="after")
    def _ranges_not_empty(self) -> "ArchiveSpec":
        for name in ("rep_range", "trans_range"):
            low, high = getattr(self, name)
            if low > high:
                raise ValueError(f"{name} is empty: [{low}, {high}]")
        return self

    def bounds(self) -> ArchiveBounds:
        return ArchiveBounds(
            self.clusters, tuple(self.rep_range), tuple(self.trans_range)
        )


class OperatorSpec(_Strict):
    crossover_rate: float = Field(0.9, ge=0.0, le=1.0)
    mutation_rate: float = Field(0.1, ge=0.0, le=1.0)
    mutation_max_depth: int = Field(4, ge=0)
    init_min_depth: int = Field(2, ge=1)
    init_max_depth: int = Field(6, ge=1)
    max_nodes: int = Field(20, ge=1)
    max_depth: int = Field(17, ge=0)
    max_retries: int = Field(10, ge=1)

    @model_validator(mode="after")
    def _depth_ramp(self) -> "OperatorSpec":
        if self.init_min_depth > self.init_max_depth:
            raise ValueError("init_min_depth must not exceed init_max_depth")
        return self

    def limits(self) -> TreeLimits:
        return TreeLimits(max_nodes=self.max_nodes, max_depth=self.max_depth)

    def variation(self) -> VariationConfig:
        return VariationConfig(
            crossover_rate=self.crossover_rate,
            mutation_rate=self.mutation_rate,
            mutation_max_depth=self.mutation_max_depth,
            init_min_depth=self.init_min_depth,
            init_max_depth=self.init_max_depth,
            max_retries=self.max_retries,
            limits=self.limits(),
        )


class EsSpec(_Strict):
    population: int = Field(10, ge=2)
    generations: int = Field(20, ge=1)
    sigma0: float = Field(1.0, gt=0.0)

    def config(self) -> EsConfig:
        return EsConfig(self.population, self.generations, self.sigma0)


class RunConfig(_Strict):
    """Everything that determines one search run."""

    method: Literal["drsr", "sr", "mosr"]
    loss: LossKind = LossKind.MSE
    budget: int = Field(100_000, gt=0)
    population_size: int = Field(1000, ge=2)
    seed: int = Field(0, ge=0)
    dataset: DatasetSpec
    archive: ArchiveSpec = Field(default_factory=ArchiveSpec)
    operators: OperatorSpec = Field(default_factory=OperatorSpec)
    es: EsSpec = Field(default_factory=EsSpec)
    tournament_size: int = Field(3, ge=2)
    record_interval: Optional[int] = Field(None, gt=0)
    probe_count: int = Field(32, ge=1)

    @property
    def trace_interval(self) -> int:
        """Offspring between trace records."""
        return self.record_interval or self.population_size

    def config_hash(self) -> str:
        """Short SHA-256 of the canonical JSON form."""
        canonical = json.dumps(
            self.model_dump(mode="json"), sort_keys=True, separators=(",", ":")
        )
        digest = hashlib.sha256(canonical.encode("utf-8")).hexdigest()
        return digest[:CONFIG_HASH_LENGTH]

    def for_trial(self, trial: int) -> "RunConfig":
        """Copy with the seed offset by the trial index."""
        return self.model_copy(update={"seed": self.seed + trial})


class ExperimentConfig(_Strict):
    """Run configuration plus trial orchestration."""

    run: RunConfig
    trials: int = Field(1, ge=1)
    output_dir: Optional[str] = None


def _problems(error: ValidationError) -> List[Tuple[str, str]]:
    return [
        (".".join(str(part) for part in item["loc"]) or "(root)", item["msg"])
        for item in error.errors()
    ]


def parse_experiment(data: Mapping[str, Any]) -> ExperimentConfig:
    """Validate an experiment document.

    Raises:
        ConfigValidationError: Listing every problem with its field path
    """
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigValidationError(_problems(e)) from e


def parse_run(data: Mapping[str, Any]) -> RunConfig:
    """Validate a bare run document."""
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigValidationError(_problems(e)) from e


def load_experiment(path: str) -> ExperimentConfig:
    """Read and validate an experiment config file.

    A document without a ``run`` key is taken as a bare run config.

    Raises:
        ConfigValidationError: If the JSON is malformed or invalid
        OSError: If the file cannot be read
    """
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigValidationError([("(document)", f"invalid JSON: {e}")]) from e
    if not isinstance(data, dict):
        raise ConfigValidationError([("(document)", "expected a JSON object")])
    if "run" not in data:
        data = {"run": data}
    config = parse_experiment(data)
    logger.info(
        "Loaded %s config from %s (hash %s)",
        config.run.method,
        path,
        config.run.config_hash(),
    )
    return config
