import json
import tempfile
import unittest
from pathlib import Path

from src.harness.benchmark import run_benchmark
from src.harness.config import ExperimentConfig
from src.harness.reports import render_table, write_report
from src.imaging.io import save_image
from src.imaging.synthetic import low_contrast_scene


class TestReports(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls._tmp = tempfile.TemporaryDirectory()
        root = Path(cls._tmp.name)
        image = save_image(low_contrast_scene(16, seed=2), root / "tiny.png")
        config = ExperimentConfig(
            images=[str(image)],
            variants=["HC-simple", "GA-plus"],
            num_of_test=1,
            max_generations=2,
            output_dir=str(root / "out"),
            hyperparams={"pop_size": 4, "neighbors_per_gen": 2},
        )
        cls.output_dir = root / "out"
        cls.report = run_benchmark(config)

    @classmethod
    def tearDownClass(cls):
        cls._tmp.cleanup()

    def test_write_report_files(self):
        json_path, table_path = write_report(self.report, self.output_dir)
        document = json.loads(json_path.read_text())
        self.assertEqual(set(document), {"header", "cells", "baselines", "ranking", "selected", "image_errors"})
        self.assertEqual(document["header"]["NumofTest"], 1)
        self.assertEqual(len(document["cells"]), 2)
        self.assertEqual(len(document["selected"]), 2)
        self.assertIn("Ranking by mean improvement rate", table_path.read_text())

    def test_table_lists_every_cell(self):
        table = render_table(self.report)
        self.assertIn("HC-simple", table)
        self.assertIn("GA-plus", table)
        self.assertIn("Selected:", table)
        self.assertIn("PopSize", table)


if __name__ == "__main__":
    unittest.main()
