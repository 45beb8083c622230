"""Unit tests for archive queries and normalization records."""

import os
import shutil
import tempfile
import unittest

import pytest

from projects.residual_sr.src.apps import (
    NormalizationRecords,
    QueryBox,
    query_archive,
    query_rows,
)
from projects.residual_sr.src.apps.experiment_app import write_transforms
from projects.residual_sr.src.archive import BehaviorDescriptor, Elite
from projects.residual_sr.src.datasets import Dataset, transform
from projects.residual_sr.src.expression import builders as b


def _elite(tree, fitness, cluster=0, trans=0):
    descriptor = BehaviorDescriptor(cluster, tree.node_count, trans)
    return Elite(tree, fitness, 1.0 / fitness - 1.0, descriptor)


class TestQueryArchive(unittest.TestCase):
    """Test descriptor-box filtering and ordering."""

    def setUp(self):
        self.elites = [
            _elite(b.add(b.var(0), b.const()), 0.8, cluster=0),
            _elite(b.var(0), 0.8, cluster=1),
            _elite(b.exp(b.var(0)), 0.9, cluster=1, trans=1),
            _elite(b.mul(b.var(0), b.var(0)), 0.95, cluster=2),
        ]

    def test_box_and_order(self):
        """Fitness descending, then fewer nodes."""
        box = QueryBox(rep_range=(1, 3), trans_range=(0, 0))
        result = query_archive(self.elites, box, top_k=10)
        assert [e.tree for e in result] == [
            b.mul(b.var(0), b.var(0)),
            b.var(0),
            b.add(b.var(0), b.const()),
        ]

    def test_cluster_filter_and_top_k(self):
        box = QueryBox(rep_range=(1, 20), trans_range=(0, 4), clusters=(1,))
        result = query_archive(self.elites, box, top_k=1)
        assert [e.tree for e in result] == [b.exp(b.var(0))]

    def test_text_breaks_remaining_ties(self):
        """Equal fitness and size fall back to canonical text."""
        elites = [
            _elite(b.sub(b.var(0), b.const()), 0.5),
            _elite(b.add(b.var(0), b.const()), 0.5),
        ]
        result = query_archive(elites, QueryBox((1, 20), (0, 4)), 2)
        assert result[0].tree == b.add(b.var(0), b.const())


class TestQueryRows(unittest.TestCase):
    """Test table rows and raw-plane relations."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        dataset = Dataset(
            inputs=[[0.0], [2.0]],
            targets=[0.1, 8.1],
            input_names=("log_M",),
            target_name="log_L",
        )
        normalized = transform(dataset, "minmax01")
        self.transforms_path = os.path.join(self.temp_dir, "transforms.json")
        write_transforms(normalized, self.transforms_path, {"config_hash": "abc"})

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_plain_rows(self):
        rows = query_rows([_elite(b.var(0, 2.0), 0.5)])
        assert rows[0]["rank"] == 1
        assert rows[0]["infix"] == "2*x0"
        assert rows[0]["weights"] == "2.0"
        assert "slope" not in rows[0]

    def test_relation_columns(self):
        """Affine elites get the raw-plane line; others get blanks."""
        normalization = NormalizationRecords.load(self.transforms_path)
        assert normalization.x.params == (0.0, 2.0)
        rows = query_rows(
            [_elite(b.var(0), 0.9), _elite(b.exp(b.var(0)), 0.5, trans=1)],
            normalization,
        )
        assert rows[0]["slope"] == pytest.approx(4.0)
        assert rows[0]["intercept"] == pytest.approx(0.1)
        assert rows[1]["slope"] == ""

    def test_missing_records(self):
        path = os.path.join(self.temp_dir, "empty.json")
        write_transforms(Dataset(inputs=[[1.0]], targets=[1.0]), path, {})
        with pytest.raises(ValueError):
            NormalizationRecords.load(path)
