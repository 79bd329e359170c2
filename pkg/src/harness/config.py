"""
Experiment configuration: a TOML document validated into ExperimentConfig.

    images = ["scene_gray.png", "scene_color.png"]
    variants = ["HC-simple", "GA-comma"]
    num_of_test = 5
    per_run_time = 120
    master_seed = 0
    output_dir = "out/benchmark"

    [hyperparams]
    change_prob = 0.5
"""

import tomllib
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from src.core.exceptions import ConfigurationException
from src.core.models import HyperParams, VariantId
from src.core.settings import settings


def budget_mode(hp: HyperParams) -> str:
    if hp.time_budget is None:
        return "generations"
    if hp.max_generations is None:
        return "time"
    return "time+generations"


class ExperimentConfig(BaseModel):
    """One benchmark matrix: every image x every variant, NumofTest runs each."""

    images: list[str] = Field(default_factory=list)
    variants: list[VariantId] = Field(default_factory=list)
    num_of_test: int = Field(default=5, ge=1)
    per_run_time: float | None = Field(default=120.0, gt=0.0)
    max_generations: int | None = Field(default=None, ge=0)
    master_seed: int = Field(default_factory=lambda: settings.runtime.seed, ge=0)
    output_dir: str = Field(default_factory=lambda: settings.runtime.output_dir)
    hyperparams: dict[str, Any] = Field(default_factory=dict)

    def resolve_hyperparams(self) -> HyperParams:
        """
        HyperParams for every run. A generation cap without an explicit
        per-run time switches to generation-capped (reproducible) mode.
        """
        time_budget = self.per_run_time
        if self.max_generations is not None and "per_run_time" not in self.model_fields_set:
            time_budget = None
        overrides = {
            **self.hyperparams,
            "time_budget": time_budget,
            "max_generations": self.max_generations,
        }
        try:
            return HyperParams(**overrides)
        except ValidationError as e:
            raise ConfigurationException(f"invalid hyperparameters: {e}") from e

    def header(self) -> dict[str, Any]:
        """Effective experiment parameters, echoed into reports."""
        hp = self.resolve_hyperparams()
        return {
            "NumofTest": self.num_of_test,
            "BudgetMode": budget_mode(hp),
            "PerRunTime": hp.time_budget,
            "MaxGenerations": hp.max_generations,
            "MasterSeed": self.master_seed,
            "ChangeProb": hp.change_prob,
            "MutateMu": hp.mutate_mu,
            "MutateSigma": hp.mutate_sigma,
            "MembershipSplitProb": hp.membership_split_prob,
            "PopSize": hp.pop_size,
            "NeighborsPerGen": hp.neighbors_per_gen,
            "CrossoverSwapProb": hp.crossover_swap_prob,
            "EdgeThreshold": hp.edge_threshold,
            "EntropySource": hp.entropy_source,
            "GaFamilySet": str(hp.ga_family_set),
        }


def load_config(path: str | Path, overrides: dict[str, Any] | None = None) -> ExperimentConfig:
    """
    Read a TOML experiment file. Relative image paths resolve against the
    file's directory; `overrides` (from CLI flags) take precedence.
    """
    path = Path(path)
    if not path.exists():
        raise ConfigurationException(f"config file not found: {path}")
    try:
        document = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationException(f"cannot parse {path}: {e}") from e

    document["images"] = [
        str(p if Path(p).is_absolute() else path.parent / p)
        for p in document.get("images", [])
    ]
    for key, value in (overrides or {}).items():
        if key == "hyperparams":
            document.setdefault("hyperparams", {}).update(value)
        else:
            document[key] = value

    try:
        return ExperimentConfig.model_validate(document)
    except ValidationError as e:
        raise ConfigurationException(f"invalid experiment config {path}: {e}") from e
