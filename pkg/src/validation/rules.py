# src/validation/rules.py

import math
from collections.abc import Sequence

from ..core.models import ValidationResult
from ..fuzzy.membership import INTENSITY_MAX, Family, MembershipFunction
from .framework import GenomeValidator, RuleRegistry, ValidationRule

MIN_FUNCTIONS = 3

# --- Membership Layer Rules ---


def _result(issues: list[str]) -> ValidationResult:
    if issues:
        return ValidationResult(is_valid=False, issues=issues)
    return ValidationResult(is_valid=True)


def check_finite_parameters(functions: Sequence[MembershipFunction]) -> ValidationResult:
    """Every parameter must be a finite number."""
    issues = [
        f"function {i} ({fn.family}) has a non-finite parameter"
        for i, fn in enumerate(functions)
        if not all(math.isfinite(x) for x in (fn.p1, fn.p2, fn.v))
    ]
    return _result(issues)


def check_target_range(functions: Sequence[MembershipFunction]) -> ValidationResult:
    """Defuzzification targets lie in [0, 255]."""
    issues = [
        f"function {i} target v={fn.v} outside [0, 255]"
        for i, fn in enumerate(functions)
        if not 0.0 <= fn.v <= INTENSITY_MAX
    ]
    return _result(issues)


def check_family_shape(functions: Sequence[MembershipFunction]) -> ValidationResult:
    """Per-family constraints on the two shape parameters."""
    issues = []
    for i, fn in enumerate(functions):
        in_range = 0.0 <= fn.p1 <= INTENSITY_MAX
        match fn.family:
            case Family.TRIANGLE:
                if not in_range or fn.p2 <= 0:
                    issues.append(f"triangle {i} needs center in [0, 255] and half-width > 0")
            case Family.GAUSSIAN:
                if not in_range or fn.p2 <= 0:
                    issues.append(f"gaussian {i} needs mean in [0, 255] and sigma > 0")
            case Family.SIGMOID:
                if not in_range or fn.p2 == 0:
                    issues.append(f"sigmoid {i} needs center in [0, 255] and slope != 0")
            case Family.SHOULDER_LEFT | Family.SHOULDER_RIGHT:
                if not (in_range and 0.0 <= fn.p2 <= INTENSITY_MAX and fn.p1 < fn.p2):
                    issues.append(f"{fn.family} {i} needs 0 <= p1 < p2 <= 255")
    return _result(issues)


# --- Structure Layer Rules ---


def check_minimum_size(functions: Sequence[MembershipFunction]) -> ValidationResult:
    """A genome holds at least three functions."""
    if len(functions) < MIN_FUNCTIONS:
        return _result(
            [f"genome needs at least {MIN_FUNCTIONS} functions, got {len(functions)}"]
        )
    return _result([])


def check_sorted_by_center(functions: Sequence[MembershipFunction]) -> ValidationResult:
    """Functions are ordered by center."""
    centers = [fn.center for fn in functions]
    if any(a > b for a, b in zip(centers, centers[1:], strict=False)):
        return _result([f"functions not sorted by center: {centers}"])
    return _result([])


# --- Rule Registration ---


def get_all_rules() -> list[ValidationRule]:
    """Returns a list of all genome validation rules."""
    return [
        # Membership Rules
        ValidationRule("finite_parameters", check_finite_parameters, "membership", priority=1),
        ValidationRule("target_range", check_target_range, "membership", priority=2),
        ValidationRule("family_shape", check_family_shape, "membership", priority=3),
        # Structure Rules
        ValidationRule("minimum_size", check_minimum_size, "structure", priority=1),
        ValidationRule("sorted_by_center", check_sorted_by_center, "structure", priority=2),
    ]


def build_default_validator() -> GenomeValidator:
    registry = RuleRegistry()
    for rule in get_all_rules():
        registry.register(rule)
    return GenomeValidator(registry)


default_validator = build_default_validator()
