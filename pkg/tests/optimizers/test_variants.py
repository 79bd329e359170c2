"""
Whole-run properties checked across all five variants.
"""

import math
from functools import cache

import numpy as np
import pytest

from src.core.models import HyperParams, VariantId
from src.fitness.evaluator import evaluate
from src.imaging.raster import GrayImage
from src.imaging.synthetic import low_contrast_scene
from src.optimizers.registry import variant_registry
from src.optimizers.trace import RunTrace, improvement_rate

GENERATIONS = 20
SEEDS = range(5)
THRESHOLD = 20.0

SCENE = low_contrast_scene(64, low=100, high=156, seed=0)


def capped(generations: int = GENERATIONS, **overrides) -> HyperParams:
    return HyperParams(
        time_budget=None, max_generations=generations, edge_threshold=THRESHOLD, **overrides
    )


@cache
def scene_run(variant: VariantId, seed: int) -> tuple[RunTrace, tuple[float, ...]]:
    """One capped run on the low-contrast scene plus the population best F per generation."""
    population_best: list[float] = []
    trace = variant_registry.run(
        SCENE,
        variant,
        capped(),
        seed=seed,
        observer=lambda gen, genomes, reports: population_best.append(max(r.F for r in reports)),
    )
    return trace, tuple(population_best)


def non_decreasing(values) -> bool:
    return all(a <= b for a, b in zip(values, values[1:], strict=False))


@pytest.mark.parametrize("variant", list(VariantId))
def test_constant_image_scores_the_sentinel_end_to_end(variant):
    flat = GrayImage(np.full((16, 16), 120, dtype=np.uint8))
    trace = variant_registry.run(flat, variant, capped(3, pop_size=6, neighbors_per_gen=3), seed=1)

    assert trace.generations == 3
    assert trace.best_report.degenerate
    assert trace.best_report.F == float("-inf")
    assert all(r.best_so_far == float("-inf") for r in trace.records)
    assert not any(math.isnan(r.gen_best) or math.isnan(r.best_so_far) for r in trace.records)
    assert improvement_rate(trace) == 0.0


@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("variant", list(VariantId))
def test_best_so_far_never_decreases(variant, seed):
    trace, population_best = scene_run(variant, seed)
    assert len(trace.records) == GENERATIONS + 1
    assert non_decreasing([r.best_so_far for r in trace.records])
    if variant == VariantId.GA_PLUS:
        assert len(population_best) == GENERATIONS + 1
        assert non_decreasing(population_best)


@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("variant", list(VariantId))
def test_capped_runs_replay_exactly(variant, seed):
    trace, _ = scene_run(variant, seed)
    again = variant_registry.run(SCENE, variant, capped(), seed=seed)
    assert again.records == trace.records
    assert again.best_genome == trace.best_genome


@pytest.mark.parametrize("variant", list(VariantId))
def test_every_variant_beats_the_original_scene(variant):
    original = evaluate(SCENE, THRESHOLD).F
    wins = sum(scene_run(variant, seed)[0].final_f > original for seed in SEEDS)
    assert wins >= 4
