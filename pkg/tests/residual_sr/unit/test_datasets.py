"""Unit tests for datasets, generators, CSV loading and transforms."""

import os
import tempfile
import unittest

import numpy as np
import pytest

from projects.residual_sr.src.datasets import (
    NGUYEN_BENCHMARKS,
    Dataset,
    TransformRecord,
    gen_contaminated_linear,
    gen_mixture,
    gen_nguyen,
    get_benchmark,
    ground_truth_tree,
    inverse_transform,
    invert_column,
    load_csv,
    transform,
)
from projects.residual_sr.src.exceptions import DatasetError
from projects.residual_sr.src.objectives import residuals


class TestDataset(unittest.TestCase):
    """Test dataset construction and slicing."""

    def test_one_dimensional_inputs_reshaped(self):
        """A flat input vector becomes one column named x0."""
        dataset = Dataset(inputs=[1.0, 2.0, 3.0], targets=[1.0, 2.0, 3.0])
        assert dataset.n == 3
        assert dataset.d == 1
        assert dataset.input_names == ("x0",)
        assert dataset.column_names == ("x0", "y")

    def test_empty_rejected(self):
        """Datasets need at least one row."""
        with pytest.raises(DatasetError):
            Dataset(inputs=np.empty((0, 1)), targets=[])

    def test_row_mismatch_rejected(self):
        """Inputs and targets must have equal length."""
        with pytest.raises(DatasetError):
            Dataset(inputs=[[1.0], [2.0]], targets=[1.0])

    def test_labels_cover_rows(self):
        """Labels must tag every row."""
        with pytest.raises(DatasetError):
            Dataset(inputs=[1.0, 2.0], targets=[1.0, 2.0], labels=["a"])

    def test_subset_and_label_order(self):
        """Subsets keep rows of one label; label order is first appearance."""
        dataset = Dataset(
            inputs=[1.0, 2.0, 3.0], targets=[4.0, 5.0, 6.0], labels=["b", "a", "b"]
        )
        assert dataset.label_names == ["b", "a"]
        subset = dataset.subset("b")
        np.testing.assert_array_equal(subset.targets, [4.0, 6.0])
        assert subset.provenance["subset"] == "b"

    def test_subset_errors(self):
        """Missing labels or unlabeled datasets raise."""
        dataset = Dataset(inputs=[1.0], targets=[1.0], labels=["a"])
        with pytest.raises(DatasetError):
            dataset.subset("z")
        with pytest.raises(DatasetError):
            Dataset(inputs=[1.0], targets=[1.0]).subset("a")

    def test_unknown_column(self):
        """Column lookup by an unknown name raises."""
        with pytest.raises(DatasetError):
            Dataset(inputs=[1.0], targets=[1.0]).column("nope")


class TestGenerators(unittest.TestCase):
    """Test synthetic generators."""

    def test_nguyen_rows_and_labels(self):
        """Base rows come first and fit the ground truth exactly."""
        dataset = gen_nguyen("1", n_base=20, n_noise=20, seed=0)
        assert dataset.n == 40
        assert dataset.label_names == ["base", "noise"]
        base = dataset.subset("base")
        np.testing.assert_allclose(
            residuals(ground_truth_tree(1), base), 0.0, atol=1e-12
        )
        bench = get_benchmark(1)
        low, high = bench.domain
        assert np.all((dataset.inputs >= low) & (dataset.inputs <= high))

    def test_nguyen_two_inputs(self):
        """Nguyen-11 and 12 draw two inputs."""
        for name in ("nguyen-11", "nguyen-12"):
            dataset = gen_nguyen(name, n_base=10, n_noise=0, seed=1)
            assert dataset.d == 2
            expected = NGUYEN_BENCHMARKS[name].direct(dataset.inputs)
            np.testing.assert_allclose(
                dataset.targets, expected, rtol=1e-9, atol=1e-12
            )

    def test_nguyen_is_seeded(self):
        """The same seed reproduces the same rows."""
        first = gen_nguyen(7, seed=5)
        second = gen_nguyen(7, seed=5)
        np.testing.assert_array_equal(first.inputs, second.inputs)
        np.testing.assert_array_equal(first.targets, second.targets)

    def test_benchmark_lookup(self):
        """Benchmarks accept several spellings and reject unknown names."""
        assert get_benchmark("Nguyen-7") is get_benchmark(7)
        with pytest.raises(DatasetError):
            get_benchmark(99)
        with pytest.raises(DatasetError):
            gen_nguyen(1, n_base=0)

    def test_mixture_components(self):
        """Every row lies on its component's curve."""
        dataset = gen_mixture(40, seed=3)
        assert set(dataset.label_names) <= {"linear", "logistic"}
        for label in dataset.label_names:
            subset = dataset.subset(label)
            np.testing.assert_allclose(
                residuals(ground_truth_tree(f"mixture-{label}"), subset),
                0.0,
                atol=1e-12,
            )
        with pytest.raises(DatasetError):
            gen_mixture(1)

    def test_contaminated_linear(self):
        """The shifted fraction sits ``offset`` above the line."""
        dataset = gen_contaminated_linear(n=20, fraction=0.4, seed=0)
        shifted = dataset.subset("shifted")
        clean = dataset.subset("clean")
        assert shifted.n == 8
        np.testing.assert_allclose(clean.targets, 2 * clean.inputs[:, 0] + 5)
        np.testing.assert_allclose(shifted.targets, 2 * shifted.inputs[:, 0] + 15)

    def test_contaminated_linear_shifts_half_by_default(self):
        dataset = gen_contaminated_linear(n=20, seed=3)
        assert dataset.subset("shifted").n == 10
        assert dataset.subset("clean").n == 10


class TestLoadCsv(unittest.TestCase):
    """Test CSV ingestion."""

    def setUp(self):
        """Write a small CSV with one bad row."""
        self.temp_dir = tempfile.mkdtemp()
        self.path = os.path.join(self.temp_dir, "data.csv")
        with open(self.path, "w", encoding="utf-8") as handle:
            handle.write("# config_hash=abc seed=0\n")
            handle.write("x,y,group\n1.0,2.0,a\nbad,3.0,a\n2.0,4.0,b\n3.0,,b\n")

    def tearDown(self):
        """Remove temporary files."""
        os.remove(self.path)
        os.rmdir(self.temp_dir)

    def test_valid_rows_loaded(self):
        """Non-numeric and missing fields are skipped and counted."""
        dataset = load_csv(self.path, ["x"], "y", label_col="group")
        np.testing.assert_array_equal(dataset.targets, [2.0, 4.0])
        assert dataset.label_names == ["a", "b"]
        assert dataset.provenance["skipped_rows"] == 2
        assert dataset.target_name == "y"

    def test_missing_column(self):
        """Requested columns must exist."""
        with pytest.raises(DatasetError):
            load_csv(self.path, ["z"], "y")

    def test_missing_file(self):
        """Unreadable files raise a dataset error."""
        with pytest.raises(DatasetError):
            load_csv(os.path.join(self.temp_dir, "absent.csv"), ["x"], "y")


class TestTransforms(unittest.TestCase):
    """Test column transforms and their inverses."""

    def setUp(self):
        """Positive data on a log scale."""
        self.dataset = Dataset(
            inputs=[[0.5], [1.0], [2.0]],
            targets=[1.0, 3.0, 5.0],
            input_names=("m",),
            target_name="l",
        )

    def test_minmax_with_fixed_bounds(self):
        """Fixed bounds define the unit interval."""
        result = transform(self.dataset, "minmax01", ["l"], {"l": (1.0, 5.0)})
        np.testing.assert_allclose(result.targets, [0.0, 0.5, 1.0])
        assert result.transforms == (TransformRecord("minmax01", "l", (1.0, 5.0)),)

    def test_minmax_constant_column(self):
        """A constant column maps to 0.5 and inverts to its value."""
        dataset = Dataset(inputs=[[2.0], [2.0]], targets=[1.0, 2.0])
        result = transform(dataset, "minmax01", ["x0"])
        np.testing.assert_allclose(result.inputs[:, 0], [0.5, 0.5])
        np.testing.assert_allclose(inverse_transform(result).inputs[:, 0], [2.0, 2.0])

    def test_chained_transforms_invert(self):
        """Undoing every record restores the raw data."""
        result = transform(self.dataset, "log10")
        result = transform(result, "minmax01")
        assert [r.spec for r in result.transforms] == ["log10"] * 2 + ["minmax01"] * 2
        restored = inverse_transform(result)
        np.testing.assert_allclose(restored.inputs, self.dataset.inputs)
        np.testing.assert_allclose(restored.targets, self.dataset.targets)
        assert restored.transforms == ()

    def test_invert_column(self):
        """Values in transformed space map back to raw units."""
        result = transform(self.dataset, "delog10", ["m"])
        result = transform(result, "minmax01", ["m"])
        raw = invert_column(result, "m", result.inputs[:, 0])
        np.testing.assert_allclose(raw, [0.5, 1.0, 2.0])

    def test_log10_needs_positive_values(self):
        """log10 of a non-positive column raises."""
        dataset = Dataset(inputs=[[0.0]], targets=[1.0])
        with pytest.raises(DatasetError):
            transform(dataset, "log10", ["x0"])

    def test_unknown_spec(self):
        """Only the three transforms exist."""
        with pytest.raises(DatasetError):
            transform(self.dataset, "sqrt")
