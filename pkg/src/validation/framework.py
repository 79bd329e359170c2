# src/validation/framework.py

import logging
from collections.abc import Callable, Sequence
from typing import Any

from ..core.exceptions import GenomeException
from ..core.models import ValidationResult

logger = logging.getLogger(__name__)

LAYERS = ("membership", "structure")


class ValidationRule:
    """A single, executable validation rule."""

    def __init__(
        self,
        name: str,
        function: Callable[[Sequence[Any]], ValidationResult],
        layer: str,
        priority: int = 100,
    ):
        self.name = name
        self.function = function
        self.layer = layer
        self.priority = priority


class RuleRegistry:
    """Manages the registration and retrieval of validation rules."""

    def __init__(self):
        self._rules: dict[str, list[ValidationRule]] = {layer: [] for layer in LAYERS}

    def register(self, rule: ValidationRule):
        """Registers a new validation rule."""
        if rule.layer not in self._rules:
            raise GenomeException(f"Invalid validation layer: {rule.layer}")
        self._rules[rule.layer].append(rule)
        self._rules[rule.layer].sort(key=lambda r: r.priority)
        logger.debug(
            f"Registered rule '{rule.name}' in layer '{rule.layer}' with priority {rule.priority}"
        )

    def get_rules_for_layer(self, layer: str) -> list[ValidationRule]:
        """Retrieves all rules for a specific layer, sorted by priority."""
        return self._rules.get(layer, [])


class RuleEngine:
    """Executes validation rules against a list of membership functions."""

    def __init__(self, registry: RuleRegistry):
        self.registry = registry

    def execute_layer(
        self, layer: str, functions: Sequence[Any]
    ) -> list[ValidationResult]:
        """Executes all rules for a specific layer."""
        results = []
        for rule in self.registry.get_rules_for_layer(layer):
            try:
                results.append(rule.function(functions))
            except Exception as e:
                logger.error(f"Rule '{rule.name}' failed with exception: {e}")
                results.append(
                    ValidationResult(
                        is_valid=False,
                        issues=[f"Rule '{rule.name}' threw an exception."],
                    )
                )
        return results


class GenomeValidator:
    """
    Runs the layered genome checks. Stops at the first layer with failures,
    since structure rules assume well-formed functions.
    """

    def __init__(self, rule_registry: RuleRegistry):
        self.engine = RuleEngine(rule_registry)
        self.layers = list(LAYERS)

    def validate(self, functions: Sequence[Any]) -> ValidationResult:
        all_issues = []

        for layer in self.layers:
            layer_results = self.engine.execute_layer(layer, functions)
            layer_issues = [
                issue
                for res in layer_results
                if not res.is_valid
                for issue in res.issues
            ]

            if layer_issues:
                all_issues.extend(layer_issues)
                logger.debug(
                    f"Genome validation failed at layer '{layer}' with issues: {layer_issues}"
                )
                return ValidationResult(is_valid=False, issues=all_issues)

        return ValidationResult(is_valid=True, issues=[])
