"""
Genetic Algorithm with (P, P) and (P + P) joins.

The population starts as the default genome plus PopSize - 1 shape-mutated
copies. Each generation breeds PopSize children by tournament selection,
uniform crossover and shape-only mutation.
"""

from src.core.exceptions import OptimizerException
from src.core.models import HyperParams, VariantId
from src.fitness.evaluator import FitnessEvaluator, FitnessReport
from src.fuzzy.genome import Genome, default_genome
from src.imaging.raster import Image

from .base import BaseOptimizer, GenerationObserver
from .operators import ga_mutate, shape_mutate, substream, tournament_select, uniform_crossover
from .trace import RunTrace


def _best_index(reports: list[FitnessReport]) -> int:
    return max(range(len(reports)), key=lambda i: (reports[i].F, -i))


class GeneticOptimizer(BaseOptimizer):
    elitist: bool

    def initial_population(self, hp: HyperParams, seed: int) -> list[Genome]:
        founder = default_genome(hp.ga_family_set)
        return [founder] + [
            shape_mutate(founder, hp, substream(seed, 0, i)) for i in range(1, hp.pop_size)
        ]

    def breed(
        self,
        population: list[Genome],
        reports: list[FitnessReport],
        hp: HyperParams,
        seed: int,
        generation: int,
    ) -> list[Genome]:
        scores = [r.F for r in reports]
        selection = substream(seed, generation, 0)
        pairs = (hp.pop_size + 1) // 2
        parents = [
            (
                tournament_select(scores, hp.tournament_size, selection),
                tournament_select(scores, hp.tournament_size, selection),
            )
            for _ in range(pairs)
        ]

        children: list[Genome] = []
        for k, (a, b) in enumerate(parents):
            rng = substream(seed, generation, k + 1)
            first, second = uniform_crossover(
                population[a], population[b], hp.crossover_swap_prob, rng
            )
            children.append(ga_mutate(first, hp, rng))
            children.append(ga_mutate(second, hp, rng))
        return children[: hp.pop_size]

    def join(
        self,
        population: list[Genome],
        reports: list[FitnessReport],
        children: list[Genome],
        child_reports: list[FitnessReport],
        pop_size: int,
    ) -> tuple[list[Genome], list[FitnessReport]]:
        if not self.elitist:
            return children, child_reports
        pool = population + children
        pool_reports = reports + child_reports
        # stable: parents win ties against children
        order = sorted(range(len(pool)), key=lambda i: -pool_reports[i].F)[:pop_size]
        return [pool[i] for i in order], [pool_reports[i] for i in order]

    def optimize(
        self,
        evaluator: FitnessEvaluator,
        hp: HyperParams,
        seed: int,
        observer: GenerationObserver | None = None,
    ) -> RunTrace:
        clock = self.make_clock(hp)
        population = self.initial_population(hp, seed)
        reports = evaluator.evaluate_many(population)

        best = _best_index(reports)
        best_genome, best_report = population[best], reports[best]
        trace = RunTrace(variant=self.variant, seed=seed)
        trace.records.append(
            self.record(0, best_report.F, best_report.F, clock.elapsed(), len(best_genome))
        )
        if observer:
            observer(0, population, reports)

        generation = 0
        while (reason := self.stop_reason(hp, generation, clock.elapsed())) is None:
            generation += 1
            children = self.breed(population, reports, hp, seed, generation)
            child_reports = evaluator.evaluate_many(children)
            population, reports = self.join(
                population, reports, children, child_reports, hp.pop_size
            )

            gen_best = _best_index(reports)
            if reports[gen_best].F > best_report.F:
                best_genome, best_report = population[gen_best], reports[gen_best]

            trace.records.append(
                self.record(
                    generation,
                    best_report.F,
                    reports[gen_best].F,
                    clock.elapsed(),
                    len(best_genome),
                )
            )
            if observer:
                observer(generation, population, reports)

        trace.best_genome, trace.best_report, trace.stopped_by = best_genome, best_report, reason
        self.logger.info(
            "Genetic algorithm finished",
            generations=generation,
            best_f=best_report.F,
            pop_size=hp.pop_size,
            stopped_by=reason,
        )
        return trace


class CommaGeneticOptimizer(GeneticOptimizer):
    variant = VariantId.GA_COMMA
    description = "(P, P): children replace the parent population"
    elitist = False


class PlusGeneticOptimizer(GeneticOptimizer):
    variant = VariantId.GA_PLUS
    description = "(P + P): best PopSize of parents and children survive"
    elitist = True


def genetic_algorithm(
    image: Image,
    variant: VariantId | str,
    hp: HyperParams,
    seed: int | None = None,
    observer: GenerationObserver | None = None,
) -> RunTrace:
    """Run one GA variant on an image."""
    variant = VariantId(variant)
    if variant == VariantId.GA_COMMA:
        return CommaGeneticOptimizer().run(image, hp, seed, observer)
    if variant == VariantId.GA_PLUS:
        return PlusGeneticOptimizer().run(image, hp, seed, observer)
    raise OptimizerException(f"{variant} is not a genetic algorithm variant")
