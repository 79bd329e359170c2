import unittest

from pydantic import ValidationError

from src.core.models import FamilySet, HyperParams, ValidationResult, VariantId


class TestCoreModels(unittest.TestCase):
    def test_validation_result_creation(self):
        """Test the creation of a ValidationResult model."""
        result = ValidationResult(is_valid=False, issues=["issue1", "issue2"])
        self.assertFalse(result.is_valid)
        self.assertEqual(result.issues, ["issue1", "issue2"])

    def test_validation_result_defaults(self):
        """Test the default values of a ValidationResult model."""
        result = ValidationResult(is_valid=True)
        self.assertEqual(result.issues, [])

    def test_hyperparams_defaults(self):
        """Defaults are the standard experiment settings."""
        hp = HyperParams()
        self.assertEqual(hp.change_prob, 0.5)
        self.assertEqual(hp.mutate_mu, 3)
        self.assertEqual(hp.mutate_sigma, 2)
        self.assertEqual(hp.membership_split_prob, 0.1)
        self.assertEqual(hp.pop_size, 30)
        self.assertEqual(hp.time_budget, 120.0)
        self.assertIsNone(hp.max_generations)
        self.assertEqual(hp.ga_family_set, FamilySet.GAUSSIAN_SIGMOID)
        self.assertEqual(hp.max_functions, 24)

    def test_hyperparams_requires_a_budget(self):
        with self.assertRaises(ValidationError):
            HyperParams(time_budget=None, max_generations=None)

    def test_hyperparams_generation_capped(self):
        hp = HyperParams(time_budget=None, max_generations=0)
        self.assertEqual(hp.max_generations, 0)

    def test_generation_cap_alone_drops_the_time_budget(self):
        self.assertIsNone(HyperParams(max_generations=5).time_budget)

    def test_explicit_time_budget_survives_a_generation_cap(self):
        hp = HyperParams(time_budget=30.0, max_generations=5)
        self.assertEqual((hp.time_budget, hp.max_generations), (30.0, 5))

    def test_hyperparams_rejects_out_of_range_probability(self):
        with self.assertRaises(ValidationError):
            HyperParams(change_prob=1.5)
        with self.assertRaises(ValidationError):
            HyperParams(mutate_sigma=-1.0)

    def test_gray_passthrough_flag(self):
        self.assertFalse(HyperParams(gray_mode="constant").gray_passthrough)
        self.assertTrue(HyperParams(gray_mode="passthrough").gray_passthrough)

    def test_variant_groups(self):
        hill_climbers = [v for v in VariantId if v.is_hill_climbing]
        self.assertEqual(
            hill_climbers,
            [VariantId.HC_SIMPLE, VariantId.HC_SPLIT_TRAPTRI, VariantId.HC_SPLIT_GAUSS],
        )
        self.assertEqual(VariantId.GA_PLUS.group, "genetic")
        self.assertEqual(VariantId("HC-simple").group, "hill-climbing")


if __name__ == "__main__":
    unittest.main()
