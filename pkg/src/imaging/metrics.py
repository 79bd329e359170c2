"""
Context metrics printed next to fitness reports. They describe an enhancement
but are never used as an optimization objective.
"""

import numpy as np
from pydantic import BaseModel
from skimage.metrics import peak_signal_noise_ratio

from .raster import GrayImage


class ContextMetrics(BaseModel):
    """Descriptive statistics of an enhanced plane against its original."""

    psnr_db: float | None
    rms_contrast: float
    mean_brightness: float
    occupied_levels: int


def psnr(reference: GrayImage, candidate: GrayImage) -> float | None:
    """Peak signal-to-noise ratio in dB; None for identical planes."""
    if np.array_equal(reference.pixels, candidate.pixels):
        return None
    return float(peak_signal_noise_ratio(reference.pixels, candidate.pixels, data_range=255))


def rms_contrast(image: GrayImage) -> float:
    return float(np.std(image.pixels.astype(np.float64) / 255.0))


def context_metrics(reference: GrayImage, candidate: GrayImage) -> ContextMetrics:
    return ContextMetrics(
        psnr_db=psnr(reference, candidate),
        rms_contrast=rms_contrast(candidate),
        mean_brightness=float(np.mean(candidate.pixels)),
        occupied_levels=int(np.count_nonzero(np.bincount(candidate.pixels.ravel()))),
    )
