import tempfile
import unittest
from pathlib import Path

from src.core.exceptions import BenchmarkException, OptimizerException
from src.core.models import VariantId
from src.harness.benchmark import BenchmarkRunner, derive_seed, run_benchmark
from src.harness.config import ExperimentConfig
from src.imaging.io import save_image
from src.imaging.synthetic import low_contrast_scene
from src.optimizers.hill_climbing import SimpleHillClimber
from src.optimizers.registry import VariantRegistry
from src.optimizers.trace import improvement_rate_from_records, read_trace_csv


class ExplodingClimber(SimpleHillClimber):
    description = "fails every run"

    def optimize(self, evaluator, hp, seed, observer=None):
        raise OptimizerException("boom")


class TestBenchmark(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)
        self.image = str(save_image(low_contrast_scene(20, seed=1), self.dir / "scene.png"))

    def tearDown(self):
        self._tmp.cleanup()

    def config(self, **overrides) -> ExperimentConfig:
        fields = {
            "images": [self.image],
            "variants": ["HC-simple"],
            "num_of_test": 2,
            "max_generations": 3,
            "output_dir": str(self.dir / "out"),
            "hyperparams": {"pop_size": 4, "neighbors_per_gen": 3, "edge_threshold": 20.0},
        }
        fields.update(overrides)
        return ExperimentConfig(**fields)

    def test_aggregate_matches_trace_files(self):
        report = run_benchmark(self.config())
        cell = report.cells[0]

        trace_rates = [
            improvement_rate_from_records(read_trace_csv(run.trace_path)) for run in cell.runs
        ]
        self.assertEqual(len(trace_rates), 2)
        self.assertEqual(cell.rates, trace_rates)
        self.assertAlmostEqual(cell.mean_improvement_rate, sum(trace_rates) / 2, delta=1e-12)
        self.assertEqual(cell.generations, [3, 3])
        self.assertTrue(
            Path(cell.runs[0].trace_path).name.startswith("scene__HC-simple__run0")
        )

    def test_nothing_to_benchmark(self):
        with self.assertRaises(BenchmarkException) as ctx:
            run_benchmark(self.config(variants=[]))
        self.assertIn("nothing to benchmark", str(ctx.exception))

    def test_runs_are_reproducible(self):
        first = run_benchmark(self.config(output_dir=str(self.dir / "a")))
        second = run_benchmark(self.config(output_dir=str(self.dir / "b")))
        self.assertEqual(first.cells[0].rates, second.cells[0].rates)
        for run_a, run_b in zip(first.cells[0].runs, second.cells[0].runs, strict=True):
            self.assertEqual(
                Path(run_a.trace_path).read_bytes(), Path(run_b.trace_path).read_bytes()
            )

    def test_seeds_differ_per_run_and_variant(self):
        seeds = {
            derive_seed(0, "scene.png", variant, run)
            for variant in VariantId
            for run in range(5)
        }
        self.assertEqual(len(seeds), 25)
        self.assertEqual(
            derive_seed(3, "x.png", "GA-plus", 1), derive_seed(3, "x.png", "GA-plus", 1)
        )

    def test_selection_contains_one_variant_per_group(self):
        report = run_benchmark(
            self.config(variants=["HC-simple", "HC-split-gauss", "GA-comma", "GA-plus"])
        )
        ranking = report.ranking
        self.assertEqual(len(ranking), 4)
        rates = [r.mean_improvement_rate for r in ranking]
        self.assertEqual(rates, sorted(rates, reverse=True))
        self.assertEqual(
            sorted(r.group for r in report.selected), ["genetic", "hill-climbing"]
        )

    def test_baselines_recorded(self):
        report = run_benchmark(self.config())
        baseline = report.baselines[0]
        self.assertEqual(baseline.image, "scene.png")
        self.assertFalse(baseline.original.degenerate)
        self.assertIsNotNone(baseline.delta_f)

    def test_missing_image_is_recorded_and_batch_continues(self):
        report = run_benchmark(
            self.config(images=[str(self.dir / "missing.png"), self.image], num_of_test=1)
        )
        self.assertIn("missing.png", report.image_errors)
        failed, ok = report.cells
        self.assertIsNone(failed.mean_improvement_rate)
        self.assertIn("file not found", failed.runs[0].error)
        self.assertIsNotNone(ok.mean_improvement_rate)

    def test_run_failure_is_recorded(self):
        registry = VariantRegistry()
        registry.register(ExplodingClimber)
        report = BenchmarkRunner(self.config(), registry).run()
        runs = report.cells[0].runs
        self.assertEqual(len(runs), 2)
        self.assertTrue(all("boom" in run.error for run in runs))
        self.assertEqual(report.ranking, [])


if __name__ == "__main__":
    unittest.main()
