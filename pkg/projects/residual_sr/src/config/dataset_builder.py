"""Dataset construction from validated dataset specs."""

import logging

from ..datasets import Dataset, gen_mixture, gen_nguyen, load_csv, transform
from .run_config import CsvSpec, DatasetSpec, MixtureSpec, NguyenSpec

logger = logging.getLogger(__name__)


def build_dataset(spec: DatasetSpec) -> Dataset:
    """Generate or load the dataset a run config names.

    CSV transforms are applied in listed order; each appends its inverse
    record to the dataset.

    Raises:
        DatasetError: If generation, loading or a transform fails
    """
    if isinstance(spec, NguyenSpec):
        return gen_nguyen(spec.name, spec.n_base, spec.n_noise, spec.seed)
    if isinstance(spec, MixtureSpec):
        return gen_mixture(spec.n, spec.seed)
    if isinstance(spec, CsvSpec):
        dataset = load_csv(spec.path, spec.x_cols, spec.y_col, spec.label_col)
        for step in spec.transforms:
            dataset = transform(dataset, step.spec, step.columns, step.bounds)
        logger.info(
            "Loaded %d rows from %s with %d transforms",
            dataset.n,
            spec.path,
            len(spec.transforms),
        )
        return dataset
    raise TypeError(f"Unsupported dataset spec {type(spec).__name__}")
