"""
Hill Climbing variants: keep one incumbent, sample NeighborsPerGen neighbors
per generation and move to the best one only on strict improvement.
"""

from collections.abc import Callable

import numpy as np

from src.core.exceptions import OptimizerException
from src.core.models import FamilySet, HyperParams, VariantId
from src.fitness.evaluator import FitnessEvaluator
from src.fuzzy.genome import Genome, default_genome
from src.imaging.raster import Image

from .base import BaseOptimizer, GenerationObserver
from .operators import shape_mutate, split_mutate, substream
from .trace import RunTrace

Mutation = Callable[[Genome, HyperParams, np.random.Generator], Genome]


class HillClimber(BaseOptimizer):
    family_set: FamilySet
    mutation: Mutation

    def optimize(
        self,
        evaluator: FitnessEvaluator,
        hp: HyperParams,
        seed: int,
        observer: GenerationObserver | None = None,
    ) -> RunTrace:
        clock = self.make_clock(hp)
        incumbent = default_genome(self.family_set)
        report = evaluator.evaluate_genome(incumbent)
        trace = RunTrace(variant=self.variant, seed=seed)
        trace.records.append(
            self.record(0, report.F, report.F, clock.elapsed(), len(incumbent))
        )
        if observer:
            observer(0, [incumbent], [report])

        generation = 0
        while (reason := self.stop_reason(hp, generation, clock.elapsed())) is None:
            generation += 1
            neighbors = [
                self.mutation(incumbent, hp, substream(seed, generation, i))
                for i in range(hp.neighbors_per_gen)
            ]
            reports = evaluator.evaluate_many(neighbors)
            best = max(range(len(reports)), key=lambda i: (reports[i].F, -i))

            if reports[best].F > report.F:
                incumbent, report = neighbors[best], reports[best]
            elif reports[best].F == report.F and not report.degenerate:
                self.logger.debug("Tie with incumbent", generation=generation, F=report.F)

            trace.records.append(
                self.record(
                    generation, report.F, reports[best].F, clock.elapsed(), len(incumbent)
                )
            )
            if observer:
                observer(generation, neighbors, reports)

        trace.best_genome, trace.best_report, trace.stopped_by = incumbent, report, reason
        self.logger.info(
            "Hill climbing finished",
            generations=generation,
            best_f=report.F,
            genome_size=len(incumbent),
            stopped_by=reason,
        )
        return trace


class SimpleHillClimber(HillClimber):
    variant = VariantId.HC_SIMPLE
    description = "Shape-only neighborhood over the trapezoid/triangle set"
    family_set = FamilySet.TRAPEZOID_TRIANGLE
    mutation = staticmethod(shape_mutate)


class SplitTrapTriHillClimber(HillClimber):
    variant = VariantId.HC_SPLIT_TRAPTRI
    description = "Shape or split neighborhood over the trapezoid/triangle set"
    family_set = FamilySet.TRAPEZOID_TRIANGLE
    mutation = staticmethod(split_mutate)


class SplitGaussHillClimber(HillClimber):
    variant = VariantId.HC_SPLIT_GAUSS
    description = "Mixed shape/split neighborhood over gaussian functions only"
    family_set = FamilySet.GAUSSIAN_ONLY
    mutation = staticmethod(split_mutate)


def hill_climb(
    image: Image,
    variant: VariantId | str,
    hp: HyperParams,
    seed: int | None = None,
    observer: GenerationObserver | None = None,
) -> RunTrace:
    """Run one Hill Climbing variant on an image."""
    variant = VariantId(variant)
    climbers = {
        c.variant: c
        for c in (SimpleHillClimber, SplitTrapTriHillClimber, SplitGaussHillClimber)
    }
    if variant not in climbers:
        raise OptimizerException(f"{variant} is not a hill climbing variant")
    return climbers[variant]().run(image, hp, seed, observer)
