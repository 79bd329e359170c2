"""
Run traces: one record per generation plus the final best genome, CSV
round-tripping, and the improvement-rate metric used to rank variants.
"""

import csv
import math
from pathlib import Path

from pydantic import BaseModel, Field

from src.core.exceptions import OptimizerException
from src.core.models import VariantId
from src.fitness.evaluator import FitnessReport
from src.fuzzy.genome import Genome

TRACE_COLUMNS = ("generation", "best_so_far_F", "gen_best_F", "elapsed_s", "genome_size")


class TraceRecord(BaseModel):
    generation: int
    best_so_far: float
    gen_best: float
    elapsed_s: float
    genome_size: int


class RunTrace(BaseModel):
    """Per-generation history of one optimization run."""

    variant: VariantId
    seed: int
    records: list[TraceRecord] = Field(default_factory=list)
    best_genome: Genome | None = None
    best_report: FitnessReport | None = None
    stopped_by: str = "generations"

    @property
    def generations(self) -> int:
        """Completed generations, not counting the initial evaluation."""
        return max(len(self.records) - 1, 0)

    @property
    def initial_f(self) -> float:
        return self.records[0].best_so_far

    @property
    def final_f(self) -> float:
        return self.records[-1].best_so_far


def improvement_rate_from_records(records: list[TraceRecord]) -> float:
    """
    (final best F - initial F) / generations. A -inf start uses the first
    finite best-so-far as its baseline; a run that never left -inf scores 0.
    """
    if not records:
        raise OptimizerException("improvement rate of an empty trace")
    generations = len(records) - 1
    final = records[-1].best_so_far
    baseline = next(
        (r.best_so_far for r in records if math.isfinite(r.best_so_far)), None
    )
    if generations == 0 or baseline is None or not math.isfinite(final):
        return 0.0
    return (final - baseline) / generations


def improvement_rate(trace: RunTrace) -> float:
    return improvement_rate_from_records(trace.records)


def write_trace_csv(trace: RunTrace, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for r in trace.records:
            writer.writerow(
                (r.generation, repr(r.best_so_far), repr(r.gen_best), repr(r.elapsed_s), r.genome_size)
            )
    return path


def read_trace_csv(path: str | Path) -> list[TraceRecord]:
    with Path(path).open(newline="", encoding="utf-8") as handle:
        return [
            TraceRecord(
                generation=int(row["generation"]),
                best_so_far=float(row["best_so_far_F"]),
                gen_best=float(row["gen_best_F"]),
                elapsed_s=float(row["elapsed_s"]),
                genome_size=int(row["genome_size"]),
            )
            for row in csv.DictReader(handle)
        ]
