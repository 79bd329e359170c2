"""
Fuzzify -> defuzzify pipeline realized as a 256-entry transfer LUT, and its
application to grayscale and color images.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import structlog

from src.core.exceptions import TransformException
from src.imaging.color import hsv_to_rgb, rgb_to_hsv
from src.imaging.raster import ColorImage, GrayImage, Image

from .genome import Genome
from .membership import INTENSITY_MAX, MembershipFunction

logger = structlog.get_logger(__name__)

EPSILON = 1e-9
LEVELS = np.arange(256, dtype=np.float64)


@dataclass(frozen=True)
class TransferLut:
    """Intensity map T: table[z] is the output for input level z."""

    table: np.ndarray
    fallback_levels: tuple[int, ...] = ()

    def __post_init__(self):
        table = np.asarray(self.table)
        if table.shape != (256,):
            raise TransformException(f"LUT needs 256 entries, got {table.shape}")
        if table.dtype != np.uint8:
            if table.min() < 0 or table.max() > 255:
                raise TransformException("LUT entries must lie in [0, 255]")
            table = table.astype(np.uint8)
        table = np.ascontiguousarray(table)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def identity(cls) -> "TransferLut":
        return cls(np.arange(256, dtype=np.uint8))

    def __getitem__(self, z: int) -> int:
        return int(self.table[z])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransferLut):
            return NotImplemented
        return np.array_equal(self.table, other.table)


def _targets(
    functions: Sequence[MembershipFunction], z: np.ndarray, gray_passthrough: bool
) -> np.ndarray:
    targets = np.array([fn.v for fn in functions], dtype=np.float64)[:, None]
    targets = np.broadcast_to(targets, (len(functions), z.size)).copy()
    if gray_passthrough and len(functions) > 2:
        # interior rules play the "make it gray" role and hand z0 through
        targets[1:-1, :] = z[None, :]
    return targets


def defuzzify_many(
    functions: Genome | Sequence[MembershipFunction],
    z: np.ndarray,
    gray_passthrough: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Weighted-average defuzzification at every intensity in `z`.

    Returns the crisp outputs clamped to [0, 255] and a mask of the inputs
    whose total membership fell below EPSILON (those pass through unchanged).
    """
    functions = list(functions)
    if not functions:
        raise TransformException("defuzzification needs at least one function")
    z = np.asarray(z, dtype=np.float64).ravel()
    degrees = np.stack([fn.degree(z) for fn in functions])
    total = degrees.sum(axis=0)
    weighted = (degrees * _targets(functions, z, gray_passthrough)).sum(axis=0)
    fallback = total < EPSILON
    crisp = np.where(fallback, z, weighted / np.where(fallback, 1.0, total))
    return np.clip(crisp, 0.0, INTENSITY_MAX), fallback


def defuzzify(
    functions: Genome | Sequence[MembershipFunction],
    z0: float,
    gray_passthrough: bool = False,
) -> float:
    """Crisp output v0 for a single input intensity z0."""
    crisp, _ = defuzzify_many(functions, np.array([z0]), gray_passthrough)
    return float(crisp[0])


def round_half_up(values: np.ndarray) -> np.ndarray:
    return np.floor(np.asarray(values, dtype=np.float64) + 0.5)


def build_lut(genome: Genome, gray_passthrough: bool = False) -> TransferLut:
    """Evaluate the genome at all 256 levels."""
    crisp, fallback = defuzzify_many(genome, LEVELS, gray_passthrough)
    fallback_levels = tuple(int(z) for z in np.flatnonzero(fallback))
    if fallback_levels:
        logger.debug(
            "Zero membership, identity fallback used",
            levels=len(fallback_levels),
            first=fallback_levels[0],
        )
    table = np.clip(round_half_up(crisp), 0, 255).astype(np.uint8)
    return TransferLut(table=table, fallback_levels=fallback_levels)


def apply_lut(image: GrayImage, lut: TransferLut) -> GrayImage:
    """Per-pixel table lookup."""
    return GrayImage(lut.table[image.pixels])


def enhance(image: Image, lut: TransferLut | Genome, gray_passthrough: bool = False) -> Image:
    """
    Apply the transfer function: directly for grayscale, on the HSV value
    plane for color.
    """
    if isinstance(lut, Genome):
        lut = build_lut(lut, gray_passthrough)
    if isinstance(image, GrayImage):
        return apply_lut(image, lut)
    if isinstance(image, ColorImage):
        hsv = rgb_to_hsv(image)
        return hsv_to_rgb(hsv.with_value(apply_lut(hsv.value, lut)))
    raise TransformException(f"cannot enhance {type(image).__name__}")
