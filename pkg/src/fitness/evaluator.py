"""
Enhancement fitness

    F = log(log(E(I_s))) * ne(I_s) / (M * N) * H(I_s)

where I_s is the Sobel magnitude image, E the sum of magnitudes, ne the
number of edge pixels and H the entropy. Logs are natural; E <= e has no
real log(log(E)) and scores the -inf sentinel instead.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Literal

import numpy as np
import structlog
from pydantic import BaseModel, field_serializer, field_validator

from src.core.settings import settings
from src.fuzzy.genome import Genome
from src.fuzzy.transform import TransferLut, apply_lut, build_lut
from src.imaging.color import rgb_to_hsv
from src.imaging.filters import entropy, sobel
from src.imaging.raster import ColorImage, GrayImage, Image

logger = structlog.get_logger(__name__)

DEGENERATE_F = float("-inf")


class FitnessReport(BaseModel):
    """F and its components for one evaluated image."""

    F: float
    E: float
    ne: int
    H: float
    M: int
    N: int
    degenerate: bool = False

    @field_serializer("F")
    def serialize_f(self, value: float) -> float | None:
        return value if math.isfinite(value) else None

    @field_validator("F", mode="before")
    @classmethod
    def parse_f(cls, value):
        return DEGENERATE_F if value is None else value

    @property
    def edge_fraction(self) -> float:
        return self.ne / (self.M * self.N)


def evaluate(
    image: GrayImage,
    edge_threshold: float | None = None,
    entropy_source: Literal["sobel", "enhanced"] | None = None,
) -> FitnessReport:
    """Score a grayscale image (for color inputs pass the value plane)."""
    if edge_threshold is None:
        edge_threshold = settings.fitness.edge_threshold
    if entropy_source is None:
        entropy_source = settings.fitness.entropy_source

    gradient = sobel(image)
    magnitudes = gradient.magnitudes
    energy = float(magnitudes.sum())
    edge_pixels = int(np.count_nonzero(magnitudes > edge_threshold))
    bits = entropy(gradient) if entropy_source == "sobel" else entropy(image)

    degenerate = energy <= math.e
    if degenerate:
        score = DEGENERATE_F
    else:
        score = math.log(math.log(energy)) * (edge_pixels / image.size) * bits

    return FitnessReport(
        F=score,
        E=energy,
        ne=edge_pixels,
        H=bits,
        M=image.width,
        N=image.height,
        degenerate=degenerate,
    )


def working_plane(image: Image) -> GrayImage:
    """The plane fitness is measured on: the image itself, or V for color."""
    if isinstance(image, ColorImage):
        return rgb_to_hsv(image).value
    return image


class FitnessEvaluator:
    """
    Evaluation session bound to one read-only image.

    The value plane of a color image enhanced by a LUT is exactly the LUT
    applied to the original value plane, so the HSV conversion happens once
    per session instead of once per candidate.
    """

    def __init__(
        self,
        image: Image,
        edge_threshold: float | None = None,
        entropy_source: Literal["sobel", "enhanced"] | None = None,
        gray_passthrough: bool = False,
        workers: int = 1,
    ):
        self.plane = working_plane(image)
        self.edge_threshold = (
            settings.fitness.edge_threshold if edge_threshold is None else edge_threshold
        )
        self.entropy_source = entropy_source or settings.fitness.entropy_source
        self.gray_passthrough = gray_passthrough
        self.workers = workers

    def evaluate_lut(self, lut: TransferLut) -> FitnessReport:
        return evaluate(
            apply_lut(self.plane, lut), self.edge_threshold, self.entropy_source
        )

    def evaluate_genome(self, genome: Genome) -> FitnessReport:
        report = self.evaluate_lut(build_lut(genome, self.gray_passthrough))
        if report.degenerate:
            logger.debug("Degenerate energy", genome_size=len(genome), E=report.E)
        return report

    def evaluate_original(self) -> FitnessReport:
        return evaluate(self.plane, self.edge_threshold, self.entropy_source)

    def evaluate_many(self, genomes: list[Genome]) -> list[FitnessReport]:
        """Score candidates; order of results follows the input order."""
        if self.workers <= 1 or len(genomes) <= 1:
            return [self.evaluate_genome(g) for g in genomes]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(self.evaluate_genome, genomes))


def fitness_of_genome(
    image: Image,
    genome: Genome,
    edge_threshold: float | None = None,
    entropy_source: Literal["sobel", "enhanced"] | None = None,
    gray_passthrough: bool = False,
) -> FitnessReport:
    """Fitness of `image` after enhancement by `genome`."""
    return FitnessEvaluator(
        image, edge_threshold, entropy_source, gray_passthrough
    ).evaluate_genome(genome)
