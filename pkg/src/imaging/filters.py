"""
Sobel gradient, histogram statistics and histogram equalization.
"""

import numpy as np
from scipy import ndimage, stats

from .color import hsv_to_rgb, rgb_to_hsv
from .raster import ColorImage, GradientField, GrayImage, Image

LEVELS = 256


def sobel(image: GrayImage) -> GradientField:
    """
    L2 Sobel magnitude sqrt(gx^2 + gy^2) with the 3x3 kernels. Borders are
    replicated, so the field has the dimensions of the input.
    """
    data = image.pixels.astype(np.float64)
    gx = ndimage.sobel(data, axis=1, mode="nearest")
    gy = ndimage.sobel(data, axis=0, mode="nearest")
    return GradientField(np.hypot(gx, gy))


def bin_levels(values: np.ndarray) -> np.ndarray:
    """Round half up and clamp real values onto the 256 histogram bins."""
    return np.clip(np.floor(np.asarray(values, dtype=np.float64) + 0.5), 0, 255).astype(
        np.int64
    )


def histogram(raster: GrayImage | GradientField) -> np.ndarray:
    """256-bin occupancy counts; gradient magnitudes are binned first."""
    if isinstance(raster, GradientField):
        levels = bin_levels(raster.magnitudes)
    else:
        levels = raster.pixels.astype(np.int64)
    return np.bincount(levels.ravel(), minlength=LEVELS)


def entropy(raster: GrayImage | GradientField) -> float:
    """Shannon entropy in bits of the 256-bin histogram."""
    counts = histogram(raster)
    return float(stats.entropy(counts, base=2))


def equalization_lut(image: GrayImage) -> np.ndarray:
    """
    Classic CDF remap: level z goes to floor(255 * cdf(z)). The mapping is
    monotone non-decreasing and the top occupied level always maps to 255.
    """
    counts = histogram(image)
    cdf = np.cumsum(counts) / image.size
    return np.floor(255.0 * cdf + 1e-9).astype(np.uint8)


def histogram_equalize(image: GrayImage) -> GrayImage:
    """Equalize the intensity histogram of a grayscale image."""
    return GrayImage(equalization_lut(image)[image.pixels])


def equalize_image(image: Image) -> Image:
    """Histogram equalization of a grayscale image, or of V for color."""
    if isinstance(image, ColorImage):
        hsv = rgb_to_hsv(image)
        return hsv_to_rgb(hsv.with_value(histogram_equalize(hsv.value)))
    return histogram_equalize(image)
