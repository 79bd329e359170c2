import os
import unittest
from unittest.mock import patch

from pydantic import ValidationError

from src.core.settings import LoggingSettings, Settings


class TestSettings(unittest.TestCase):
    def test_section_defaults(self):
        with patch.dict(os.environ, {}, clear=True):
            s = Settings(_env_file=None)
        self.assertEqual(s.fitness.edge_threshold, 20.0)
        self.assertEqual(s.fitness.entropy_source, "sobel")
        self.assertFalse(s.transform.freeze_targets)
        self.assertEqual(s.transform.gray_mode, "constant")
        self.assertEqual(s.runtime.workers, 1)
        self.assertEqual(s.runtime.output_dir, "out")
        self.assertFalse(s.is_production())

    def test_environment_aliases(self):
        env = {
            "EDGE_THRESHOLD": "35.5",
            "ENTROPY_SOURCE": "enhanced",
            "GRAY_MODE": "passthrough",
            "EVAL_WORKERS": "4",
            "MASTER_SEED": "11",
            "ENV": "production",
        }
        with patch.dict(os.environ, env, clear=True):
            s = Settings(_env_file=None)
        self.assertEqual(s.fitness.edge_threshold, 35.5)
        self.assertEqual(s.fitness.entropy_source, "enhanced")
        self.assertEqual(s.transform.gray_mode, "passthrough")
        self.assertEqual(s.runtime.workers, 4)
        self.assertEqual(s.runtime.seed, 11)
        self.assertTrue(s.is_production())

    def test_invalid_entropy_source_rejected(self):
        with patch.dict(os.environ, {"ENTROPY_SOURCE": "histogram"}, clear=True):
            with self.assertRaises(ValidationError):
                Settings(_env_file=None)

    def test_log_level_is_normalized(self):
        self.assertEqual(LoggingSettings(log_level="debug").log_level, "DEBUG")
        with self.assertRaises(ValidationError):
            LoggingSettings(log_level="chatty")


if __name__ == "__main__":
    unittest.main()
