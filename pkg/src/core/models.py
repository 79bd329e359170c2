# src/core/models.py
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, Field, model_validator

from .settings import EntropySource, GrayMode, settings


class ValidationResult(BaseModel):
    """
    Represents the outcome of a validation check.
    """

    is_valid: bool
    issues: list[str] = []


class FamilySet(StrEnum):
    """Membership-function family sets a default genome can be built from."""

    TRAPEZOID_TRIANGLE = "trapezoid-triangle"
    GAUSSIAN_ONLY = "gaussian-only"
    GAUSSIAN_SIGMOID = "gaussian-sigmoid"


class VariantId(StrEnum):
    """The five optimizer variants."""

    HC_SIMPLE = "HC-simple"
    HC_SPLIT_TRAPTRI = "HC-split-traptri"
    HC_SPLIT_GAUSS = "HC-split-gauss"
    GA_COMMA = "GA-comma"
    GA_PLUS = "GA-plus"

    @property
    def is_hill_climbing(self) -> bool:
        return self.value.startswith("HC-")

    @property
    def group(self) -> str:
        return "hill-climbing" if self.is_hill_climbing else "genetic"


class HyperParams(BaseModel):
    """
    Optimizer hyperparameters. Defaults are the standard experiment settings;
    fitness and transform switches default to the environment settings.
    """

    change_prob: float = Field(default=0.5, ge=0.0, le=1.0)
    mutate_mu: float = Field(default=3.0)
    mutate_sigma: float = Field(default=2.0, ge=0.0)
    membership_split_prob: float = Field(default=0.1, ge=0.0, le=1.0)
    pop_size: int = Field(default=30, ge=2)
    neighbors_per_gen: int = Field(default=10, ge=1)
    crossover_swap_prob: float = Field(default=0.5, ge=0.0, le=1.0)
    tournament_size: int = Field(default=2, ge=1)
    max_functions: int = Field(default=24, ge=3)
    ga_family_set: FamilySet = FamilySet.GAUSSIAN_SIGMOID

    edge_threshold: float = Field(
        default_factory=lambda: settings.fitness.edge_threshold, ge=0.0
    )
    entropy_source: EntropySource = Field(
        default_factory=lambda: settings.fitness.entropy_source
    )
    freeze_targets: bool = Field(
        default_factory=lambda: settings.transform.freeze_targets
    )
    gray_mode: GrayMode = Field(default_factory=lambda: settings.transform.gray_mode)

    time_budget: float | None = Field(default=120.0, gt=0.0)
    max_generations: int | None = Field(default=None, ge=0)
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default_factory=lambda: settings.runtime.workers, ge=1)

    @model_validator(mode="before")
    @classmethod
    def generation_cap_without_clock(cls, data: Any) -> Any:
        # a generation cap alone runs generation-capped, with a frozen trace clock
        if isinstance(data, dict) and data.get("max_generations") is not None:
            if "time_budget" not in data:
                data = {**data, "time_budget": None}
        return data

    @model_validator(mode="after")
    def check_budget(self) -> "HyperParams":
        if self.time_budget is None and self.max_generations is None:
            raise ValueError("either time_budget or max_generations must be set")
        return self

    @property
    def gray_passthrough(self) -> bool:
        return self.gray_mode == "passthrough"
