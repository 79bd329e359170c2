import unittest
from unittest.mock import MagicMock

from src.core.exceptions import GenomeException
from src.core.models import ValidationResult
from src.validation.framework import (
    GenomeValidator,
    RuleEngine,
    RuleRegistry,
    ValidationRule,
)


class TestRuleRegistry(unittest.TestCase):
    def setUp(self):
        self.registry = RuleRegistry()

    def test_register_rule_success(self):
        """Test successful registration of a validation rule."""
        rule = ValidationRule(name="test_rule", function=lambda x: None, layer="membership")
        self.registry.register(rule)
        self.assertIn(rule, self.registry.get_rules_for_layer("membership"))

    def test_register_rule_invalid_layer_raises_exception(self):
        """Test that registering a rule with an invalid layer raises an exception."""
        rule = ValidationRule(name="test_rule", function=lambda x: None, layer="nonexistent")
        with self.assertRaises(GenomeException):
            self.registry.register(rule)

    def test_get_rules_for_layer_sorted_by_priority(self):
        """Rules come back in priority order regardless of registration order."""
        rule1 = ValidationRule(name="rule1", function=lambda x: None, layer="structure", priority=1)
        rule2 = ValidationRule(name="rule2", function=lambda x: None, layer="structure", priority=2)
        self.registry.register(rule2)
        self.registry.register(rule1)
        self.assertEqual(self.registry.get_rules_for_layer("structure"), [rule1, rule2])

    def test_get_rules_for_empty_layer_returns_empty_list(self):
        self.assertEqual(self.registry.get_rules_for_layer("structure"), [])


class TestRuleEngine(unittest.TestCase):
    def setUp(self):
        self.mock_registry = MagicMock(spec=RuleRegistry)
        self.engine = RuleEngine(self.mock_registry)
        self.functions = []

    def test_execute_layer_success(self):
        rule = ValidationRule(
            name="success_rule",
            function=lambda _: ValidationResult(is_valid=True),
            layer="membership",
        )
        self.mock_registry.get_rules_for_layer.return_value = [rule]

        results = self.engine.execute_layer("membership", self.functions)

        self.assertEqual(len(results), 1)
        self.assertTrue(results[0].is_valid)

    def test_execute_layer_with_failing_rule(self):
        rule = ValidationRule(
            name="failing_rule",
            function=lambda _: ValidationResult(is_valid=False, issues=["failure"]),
            layer="membership",
        )
        self.mock_registry.get_rules_for_layer.return_value = [rule]

        results = self.engine.execute_layer("membership", self.functions)

        self.assertFalse(results[0].is_valid)
        self.assertEqual(results[0].issues, ["failure"])

    def test_execute_layer_with_exception(self):
        """A rule that raises becomes a failed result instead of propagating."""

        def exception_rule(_):
            raise ValueError("Something went wrong")

        rule = ValidationRule(name="exception_rule", function=exception_rule, layer="membership")
        self.mock_registry.get_rules_for_layer.return_value = [rule]

        results = self.engine.execute_layer("membership", self.functions)

        self.assertEqual(len(results), 1)
        self.assertFalse(results[0].is_valid)
        self.assertIn("threw an exception", results[0].issues[0])

    def test_execute_layer_with_no_rules(self):
        self.mock_registry.get_rules_for_layer.return_value = []
        self.assertEqual(self.engine.execute_layer("membership", self.functions), [])


class TestGenomeValidator(unittest.TestCase):
    def setUp(self):
        self.validator = GenomeValidator(MagicMock())
        self.mock_engine = MagicMock(spec=RuleEngine)
        self.validator.engine = self.mock_engine

    def test_validate_all_layers_pass(self):
        self.mock_engine.execute_layer.return_value = [ValidationResult(is_valid=True)]

        result = self.validator.validate([])

        self.assertTrue(result.is_valid)
        self.assertEqual(result.issues, [])
        self.assertEqual(self.mock_engine.execute_layer.call_count, 2)

    def test_validate_stops_at_first_failing_layer(self):
        self.mock_engine.execute_layer.side_effect = [
            [ValidationResult(is_valid=False, issues=["bad function"])],
            [ValidationResult(is_valid=True)],
        ]

        result = self.validator.validate([])

        self.assertFalse(result.is_valid)
        self.assertEqual(result.issues, ["bad function"])
        self.assertEqual(self.mock_engine.execute_layer.call_count, 1)


if __name__ == "__main__":
    unittest.main()
