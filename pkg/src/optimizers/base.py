"""
Base class shared by all optimizer variants.
"""

import time
from abc import ABC, abstractmethod
from collections.abc import Callable
from contextlib import contextmanager

import structlog

from src.core.models import HyperParams, VariantId
from src.fitness.evaluator import FitnessEvaluator, FitnessReport
from src.fuzzy.genome import Genome
from src.imaging.raster import Image

from .trace import RunTrace, TraceRecord

GenerationObserver = Callable[[int, list[Genome], list[FitnessReport]], None]


class WallClock:
    def __init__(self):
        self._start = time.perf_counter()

    def elapsed(self) -> float:
        return time.perf_counter() - self._start


class FrozenClock:
    """Clock for generation-capped runs: traces stay byte-reproducible."""

    def elapsed(self) -> float:
        return 0.0


class BaseOptimizer(ABC):
    """Abstract base class for all optimizer variants."""

    variant: VariantId
    description: str

    def __init__(self):
        self.logger = structlog.get_logger(f"optimizer.{self.variant}")
        self._run_count = 0

    @abstractmethod
    def optimize(
        self,
        evaluator: FitnessEvaluator,
        hp: HyperParams,
        seed: int,
        observer: GenerationObserver | None = None,
    ) -> RunTrace:
        """Run the search against a prepared evaluation session."""

    def run(
        self,
        image: Image,
        hp: HyperParams,
        seed: int | None = None,
        observer: GenerationObserver | None = None,
    ) -> RunTrace:
        """Optimize the transfer function for one image."""
        seed = hp.seed if seed is None else seed
        evaluator = FitnessEvaluator(
            image,
            edge_threshold=hp.edge_threshold,
            entropy_source=hp.entropy_source,
            gray_passthrough=hp.gray_passthrough,
            workers=hp.workers,
        )
        with self._execution_context(hp, seed):
            return self.optimize(evaluator, hp, seed, observer)

    @contextmanager
    def _execution_context(self, hp: HyperParams, seed: int):
        """Timing and logging around one run."""
        start_time = time.perf_counter()
        self._run_count += 1
        run_id = f"{self.variant}_{self._run_count}"
        self.logger.debug(
            "Starting run",
            run_id=run_id,
            seed=seed,
            time_budget=hp.time_budget,
            max_generations=hp.max_generations,
        )
        try:
            yield
        except Exception as e:
            elapsed_ms = (time.perf_counter() - start_time) * 1000
            self.logger.error("Run failed", run_id=run_id, elapsed_ms=round(elapsed_ms, 1), error=str(e))
            raise
        else:
            elapsed_ms = (time.perf_counter() - start_time) * 1000
            self.logger.debug("Run completed", run_id=run_id, elapsed_ms=round(elapsed_ms, 1))

    @staticmethod
    def make_clock(hp: HyperParams) -> WallClock | FrozenClock:
        return WallClock() if hp.time_budget is not None else FrozenClock()

    @staticmethod
    def stop_reason(hp: HyperParams, generation: int, elapsed: float) -> str | None:
        """Budget check between generations; a generation is never cut short."""
        if hp.max_generations is not None and generation >= hp.max_generations:
            return "generations"
        if hp.time_budget is not None and elapsed >= hp.time_budget:
            return "time"
        return None

    @staticmethod
    def record(
        generation: int,
        best_so_far: float,
        gen_best: float,
        elapsed: float,
        genome_size: int,
    ) -> TraceRecord:
        return TraceRecord(
            generation=generation,
            best_so_far=best_so_far,
            gen_best=gen_best,
            elapsed_s=elapsed,
            genome_size=genome_size,
        )

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(variant='{self.variant}')"
