import unittest

from src.fuzzy.membership import Family, MembershipFunction, gaussian, shoulder_left, triangle
from src.validation.framework import ValidationRule
from src.validation.rules import (
    check_family_shape,
    check_finite_parameters,
    check_minimum_size,
    check_sorted_by_center,
    check_target_range,
    default_validator,
    get_all_rules,
)


class TestValidationRules(unittest.TestCase):
    def setUp(self):
        self.valid = [
            shoulder_left(0, 127, 0),
            triangle(127, 96, 127),
            gaussian(255, 50, 255),
        ]

    def test_valid_genome_passes_every_rule(self):
        for rule in get_all_rules():
            self.assertTrue(rule.function(self.valid).is_valid, rule.name)
        self.assertTrue(default_validator.validate(self.valid).is_valid)

    def test_check_finite_parameters_failure(self):
        bad = [gaussian(10, float("nan"), 0)]
        result = check_finite_parameters(bad)
        self.assertFalse(result.is_valid)
        self.assertIn("non-finite", result.issues[0])

    def test_check_target_range_failure(self):
        result = check_target_range([triangle(127, 10, 300)])
        self.assertFalse(result.is_valid)
        self.assertIn("outside [0, 255]", result.issues[0])

    def test_check_family_shape_failures(self):
        bad = [
            triangle(127, 0, 10),
            gaussian(-5, 10, 10),
            MembershipFunction(family=Family.SIGMOID, p1=100, p2=0, v=0),
            shoulder_left(100, 50, 0),
        ]
        result = check_family_shape(bad)
        self.assertFalse(result.is_valid)
        self.assertEqual(len(result.issues), 4)

    def test_check_minimum_size_failure(self):
        result = check_minimum_size(self.valid[:2])
        self.assertFalse(result.is_valid)
        self.assertIn("at least 3", result.issues[0])

    def test_check_sorted_by_center_failure(self):
        result = check_sorted_by_center(list(reversed(self.valid)))
        self.assertFalse(result.is_valid)

    def test_structure_layer_not_reached_when_membership_fails(self):
        bad = [triangle(127, 10, 300)]
        result = default_validator.validate(bad)
        self.assertFalse(result.is_valid)
        # minimum-size issue belongs to the later layer
        self.assertTrue(all("at least" not in issue for issue in result.issues))

    def test_get_all_rules(self):
        rules = get_all_rules()
        self.assertIsInstance(rules, list)
        self.assertTrue(all(isinstance(rule, ValidationRule) for rule in rules))
        self.assertEqual(len(rules), 5)


if __name__ == "__main__":
    unittest.main()
