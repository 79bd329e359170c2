"""
Benchmark runner: every (image, variant) cell is run NumofTest times with
independent derived seeds, traces are written per run, and variants are
ranked by mean improvement rate.
"""

import hashlib
import math
from pathlib import Path
from typing import Any

import structlog
from pydantic import BaseModel, Field

from src.core.exceptions import BenchmarkException, FuzzyContrastException
from src.core.models import HyperParams, VariantId
from src.fitness.evaluator import FitnessReport, evaluate, working_plane
from src.fuzzy.serialization import save_genome
from src.imaging.filters import histogram_equalize
from src.imaging.io import load_image
from src.imaging.raster import Image
from src.optimizers.registry import VariantRegistry, variant_registry
from src.optimizers.trace import improvement_rate, write_trace_csv

from .config import ExperimentConfig

logger = structlog.get_logger(__name__)


def derive_seed(master_seed: int, image: str, variant: VariantId | str, run: int) -> int:
    """Stable per-run seed from the experiment coordinates."""
    key = f"{master_seed}|{image}|{variant}|{run}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big") >> 1


def finite_or_none(value: float) -> float | None:
    return value if math.isfinite(value) else None


def mean(values: list[float]) -> float | None:
    return sum(values) / len(values) if values else None


class RunOutcome(BaseModel):
    run: int
    seed: int
    trace_path: str | None = None
    improvement_rate: float | None = None
    initial_f: float | None = None
    final_f: float | None = None
    generations: int = 0
    stopped_by: str | None = None
    error: str | None = None

    @property
    def succeeded(self) -> bool:
        return self.error is None


class CellSummary(BaseModel):
    """Aggregate over the runs of one (image, variant) cell."""

    image: str
    variant: VariantId
    runs: list[RunOutcome] = Field(default_factory=list)

    @property
    def completed(self) -> list[RunOutcome]:
        return [r for r in self.runs if r.succeeded]

    @property
    def rates(self) -> list[float]:
        return [r.improvement_rate for r in self.completed]

    @property
    def mean_improvement_rate(self) -> float | None:
        return mean(self.rates)

    @property
    def mean_final_f(self) -> float | None:
        finals = [r.final_f for r in self.completed]
        if not finals or any(f is None for f in finals):
            return None
        return mean(finals)

    @property
    def generations(self) -> list[int]:
        return [r.generations for r in self.completed]

    def summary(self) -> dict[str, Any]:
        return {
            "image": self.image,
            "variant": str(self.variant),
            "improvement_rates": self.rates,
            "mean_improvement_rate": self.mean_improvement_rate,
            "mean_final_f": self.mean_final_f,
            "generations": self.generations,
            "runs": [r.model_dump() for r in self.runs],
        }


class ImageBaseline(BaseModel):
    image: str
    original: FitnessReport
    equalized: FitnessReport

    @property
    def delta_f(self) -> float | None:
        return finite_or_none(self.equalized.F - self.original.F)


class VariantRanking(BaseModel):
    variant: VariantId
    group: str
    mean_improvement_rate: float


class BenchmarkReport(BaseModel):
    header: dict[str, Any]
    cells: list[CellSummary] = Field(default_factory=list)
    baselines: list[ImageBaseline] = Field(default_factory=list)
    image_errors: dict[str, str] = Field(default_factory=dict)

    @property
    def ranking(self) -> list[VariantRanking]:
        """Variants by mean (over images) of cell mean improvement rate, best first."""
        order: list[VariantId] = []
        per_variant: dict[VariantId, list[float]] = {}
        for cell in self.cells:
            if cell.variant not in per_variant:
                order.append(cell.variant)
                per_variant[cell.variant] = []
            if cell.mean_improvement_rate is not None:
                per_variant[cell.variant].append(cell.mean_improvement_rate)
        ranked = [
            VariantRanking(
                variant=v,
                group=v.group,
                mean_improvement_rate=mean(per_variant[v]),
            )
            for v in order
            if per_variant[v]
        ]
        return sorted(ranked, key=lambda r: -r.mean_improvement_rate)

    @property
    def selected(self) -> list[VariantRanking]:
        """Best Hill Climbing variant and best GA variant, in rank order."""
        picks: dict[str, VariantRanking] = {}
        for entry in self.ranking:
            picks.setdefault(entry.group, entry)
        return list(picks.values())

    def to_document(self) -> dict[str, Any]:
        return {
            "header": self.header,
            "cells": [c.summary() for c in self.cells],
            "baselines": [
                {
                    "image": b.image,
                    "original": b.original.model_dump(mode="json"),
                    "equalized": b.equalized.model_dump(mode="json"),
                    "delta_f": b.delta_f,
                }
                for b in self.baselines
            ],
            "ranking": [r.model_dump(mode="json") for r in self.ranking],
            "selected": [r.model_dump(mode="json") for r in self.selected],
            "image_errors": self.image_errors,
        }


def baseline_reports(image: Image, hp: HyperParams) -> tuple[FitnessReport, FitnessReport]:
    """F of the original and of its histogram-equalized working plane."""
    plane = working_plane(image)
    original = evaluate(plane, hp.edge_threshold, hp.entropy_source)
    equalized = evaluate(histogram_equalize(plane), hp.edge_threshold, hp.entropy_source)
    return original, equalized


def trace_filename(image: str, variant: VariantId | str, run: int) -> str:
    return f"{Path(image).stem}__{variant}__run{run}.csv"


class BenchmarkRunner:
    """Executes an ExperimentConfig and assembles its BenchmarkReport."""

    def __init__(self, config: ExperimentConfig, registry: VariantRegistry = variant_registry):
        if not config.variants:
            raise BenchmarkException("nothing to benchmark")
        if not config.images:
            raise BenchmarkException("no images to benchmark")
        self.config = config
        self.registry = registry
        self.hp = config.resolve_hyperparams()
        self.output_dir = Path(config.output_dir)

    def run(self) -> BenchmarkReport:
        report = BenchmarkReport(header=self.config.header())
        for image_path in self.config.images:
            name = Path(image_path).name
            try:
                image = load_image(image_path)
            except FuzzyContrastException as e:
                logger.error("Image skipped", image=name, error=str(e))
                report.image_errors[name] = str(e)
                for variant in self.config.variants:
                    report.cells.append(self._failed_cell(name, variant, str(e)))
                continue

            original, equalized = baseline_reports(image, self.hp)
            report.baselines.append(
                ImageBaseline(image=name, original=original, equalized=equalized)
            )
            for variant in self.config.variants:
                report.cells.append(self.run_cell(image, name, variant))
        logger.info(
            "Benchmark finished",
            cells=len(report.cells),
            selected=[str(r.variant) for r in report.selected],
        )
        return report

    def run_cell(self, image: Image, name: str, variant: VariantId) -> CellSummary:
        cell = CellSummary(image=name, variant=variant)
        for run in range(self.config.num_of_test):
            cell.runs.append(self.run_once(image, name, variant, run))
        logger.info(
            "Cell finished",
            image=name,
            variant=str(variant),
            mean_improvement_rate=cell.mean_improvement_rate,
        )
        return cell

    def run_once(self, image: Image, name: str, variant: VariantId, run: int) -> RunOutcome:
        seed = derive_seed(self.config.master_seed, name, variant, run)
        try:
            trace = self.registry.run(image, variant, self.hp, seed=seed)
            trace_path = write_trace_csv(
                trace, self.output_dir / "traces" / trace_filename(name, variant, run)
            )
            if trace.best_genome is not None:
                save_genome(
                    trace.best_genome,
                    self.output_dir / "genomes" / trace_path.with_suffix(".json").name,
                )
            return RunOutcome(
                run=run,
                seed=seed,
                trace_path=str(trace_path),
                improvement_rate=improvement_rate(trace),
                initial_f=finite_or_none(trace.initial_f),
                final_f=finite_or_none(trace.final_f),
                generations=trace.generations,
                stopped_by=trace.stopped_by,
            )
        except Exception as e:
            logger.error("Run failed", image=name, variant=str(variant), run=run, error=str(e))
            return RunOutcome(run=run, seed=seed, error=f"{type(e).__name__}: {e}")

    def _failed_cell(self, name: str, variant: VariantId, error: str) -> CellSummary:
        return CellSummary(
            image=name,
            variant=variant,
            runs=[
                RunOutcome(
                    run=run,
                    seed=derive_seed(self.config.master_seed, name, variant, run),
                    error=error,
                )
                for run in range(self.config.num_of_test)
            ],
        )


def run_benchmark(
    config: ExperimentConfig, registry: VariantRegistry = variant_registry
) -> BenchmarkReport:
    return BenchmarkRunner(config, registry).run()
