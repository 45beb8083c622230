"""Unit tests for the search loops, run context and engine factory."""

import os

import numpy as np
import pytest

from projects.residual_sr.src.clustering import ClusterAssignment, save_assignment
from projects.residual_sr.src.config import parse_run
from projects.residual_sr.src.engines import (
    DrsrEngine,
    MosrEngine,
    SrEngine,
    build_context,
    fast_non_dominated_sort,
    objectives,
    run_drsr,
    run_mosr,
    run_sr,
)
from projects.residual_sr.src.factories import SearchEngineFactory
from projects.residual_sr.src.file_operations import read_csv_rows, read_meta


def _config(document, **overrides):
    return parse_run({**document, **overrides})


class TestDrsrEngine:
    """Archive-driven search on a small budget."""

    def test_stays_within_budget(self, small_run_document):
        trace = run_drsr(_config(small_run_document))
        assert 0 < trace.evaluations <= 240
        assert trace.final.evaluations == trace.evaluations
        assert trace.snapshot

    def test_best_and_coverage_never_decrease(self, small_run_document):
        """Elites are only ever replaced by fitter ones."""
        trace = run_drsr(_config(small_run_document))
        best = [record.best_fitness for record in trace.records]
        cover = [record.coverage for record in trace.records]
        assert best == sorted(best)
        assert cover == sorted(cover)
        assert [r.generation for r in trace.records] == sorted(
            r.generation for r in trace.records
        )

    def test_records_per_label_accuracy(self, small_run_document):
        trace = run_drsr(_config(small_run_document))
        metrics = trace.final.metrics()
        for label in ("base", "noise"):
            assert 0.0 <= metrics[f"accuracy_best_{label}"] <= 1.0
            assert metrics[f"accuracy_max_{label}"] >= metrics[f"accuracy_best_{label}"]

    def test_deterministic(self, small_run_document):
        first = run_drsr(_config(small_run_document))
        second = run_drsr(_config(small_run_document))
        assert first.records == second.records
        assert first.snapshot == second.snapshot

    def test_trace_files(self, small_run_document, tmp_path):
        """Each metric gets its own CSV with the run metadata header."""
        config = _config(small_run_document)
        trace = run_drsr(config)
        paths = trace.write_csvs(str(tmp_path))
        assert os.path.join(str(tmp_path), "trace_best_fitness.csv") in paths
        meta = read_meta(paths[0])
        assert meta == {
            "config_hash": config.config_hash(),
            "seed": "3",
            "method": "drsr",
        }
        rows = read_csv_rows(paths[0])
        assert len(rows) == len(trace.records)
        assert set(rows[0]) == {"generation", "evaluations", "value"}


class TestGenerationalEngines:
    """SR and MOSR baselines."""

    def test_sr_keeps_its_best(self, small_run_document):
        trace = run_sr(_config(small_run_document, method="sr"))
        assert trace.evaluations <= 240
        best = [record.best_fitness for record in trace.records]
        assert best == sorted(best)
        assert len(trace.records) >= 2

    def test_mosr_runs_within_budget(self, small_run_document):
        trace = run_mosr(_config(small_run_document, method="mosr"))
        assert trace.method == "mosr"
        assert trace.evaluations <= 240
        assert [r.generation for r in trace.records] == list(
            range(len(trace.records))
        )

    def test_mosr_population_front(self, small_run_document):
        """The final snapshot's first front is mutually non-dominated."""
        config = _config(small_run_document, method="mosr")
        engine = MosrEngine()
        trace = engine.run(build_context(config))
        values = np.array(
            [(-elite.fitness, elite.tree.node_count) for elite in trace.snapshot]
        )
        front = fast_non_dominated_sort(values)[0]
        for i in front:
            for j in front:
                assert not (
                    np.all(values[i] <= values[j]) and np.any(values[i] < values[j])
                )

    def test_objectives_shape(self):
        assert objectives([]).shape == (0, 2)


class TestRunContext:
    """Context preparation."""

    def test_injected_assignment(self, small_run_document, tmp_path):
        """A saved assignment replaces k-means clustering."""
        labels = np.array([i % 3 for i in range(15)])
        path = os.path.join(str(tmp_path), "clusters.csv")
        save_assignment(ClusterAssignment(labels=labels, k=3), path)
        document = dict(small_run_document)
        document["archive"] = {"clusters": 3, "assignment_path": path}
        context = build_context(parse_run(document))
        np.testing.assert_array_equal(context.assignment.labels, labels)
        assert context.budget.limit == 240
        assert context.dataset.n == 15


class TestSearchEngineFactory:
    """Engine lookup by method name."""

    def test_create_engine(self):
        assert isinstance(SearchEngineFactory.create_engine("drsr"), DrsrEngine)
        assert isinstance(SearchEngineFactory.create_engine("sr"), SrEngine)
        assert isinstance(SearchEngineFactory.create_engine("mosr"), MosrEngine)
        assert SearchEngineFactory.available_methods() == ("drsr", "sr", "mosr")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            SearchEngineFactory.create_engine("gp")
