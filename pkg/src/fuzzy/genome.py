"""
Genome: the ordered membership functions that define one transfer function.
"""

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, model_validator

from src.core.exceptions import GenomeException
from src.core.models import FamilySet
from src.validation.rules import default_validator

from .membership import (
    MembershipFunction,
    gaussian,
    shoulder_left,
    shoulder_right,
    sigmoid,
    triangle,
)

V_DARK = 0.0
V_GRAY = 127.0
V_BRIGHT = 255.0


class Genome(BaseModel):
    """At least three membership functions, sorted by center."""

    model_config = ConfigDict(frozen=True)

    functions: tuple[MembershipFunction, ...]

    @model_validator(mode="after")
    def check_invariants(self) -> "Genome":
        result = default_validator.validate(self.functions)
        if not result.is_valid:
            raise GenomeException("invalid genome: " + "; ".join(result.issues))
        return self

    @classmethod
    def from_functions(cls, functions: Iterable[MembershipFunction]) -> "Genome":
        """Build a genome, restoring the center ordering first."""
        return cls(functions=tuple(sorted(functions, key=MembershipFunction.sort_key)))

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)

    def __getitem__(self, index: int) -> MembershipFunction:
        return self.functions[index]


def default_genome(family_set: FamilySet | str) -> Genome:
    """
    The dark/gray/bright starting point: dark pixels go darker (v=0), gray
    stays gray (v=127), bright goes brighter (v=255).
    """
    match FamilySet(family_set):
        case FamilySet.TRAPEZOID_TRIANGLE:
            functions = [
                shoulder_left(0.0, 127.0, V_DARK),
                triangle(127.0, 96.0, V_GRAY),
                shoulder_right(127.0, 255.0, V_BRIGHT),
            ]
        case FamilySet.GAUSSIAN_ONLY:
            functions = [
                gaussian(0.0, 50.0, V_DARK),
                gaussian(127.0, 50.0, V_GRAY),
                gaussian(255.0, 50.0, V_BRIGHT),
            ]
        case FamilySet.GAUSSIAN_SIGMOID:
            functions = [
                sigmoid(64.0, -0.1, V_DARK),
                gaussian(127.0, 50.0, V_GRAY),
                sigmoid(191.0, 0.1, V_BRIGHT),
            ]
    return Genome.from_functions(functions)
