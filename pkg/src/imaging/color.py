"""
RGB <-> HSV conversion. Only the value plane is quantized; hue and saturation
keep float precision so an unmodified round trip reproduces every pixel.
"""

import numpy as np
from skimage.color import hsv2rgb, rgb2hsv

from src.core.exceptions import ImageFormatException

from .raster import ColorImage, GrayImage, HsvImage


def quantize(values: np.ndarray) -> np.ndarray:
    """Round half up onto the 8-bit grid."""
    return np.clip(np.floor(values * 255.0 + 0.5), 0, 255).astype(np.uint8)


def rgb_to_hsv(image: ColorImage) -> HsvImage:
    """Split a color image into hue, saturation and an 8-bit value plane."""
    hsv = rgb2hsv(image.pixels.astype(np.float64) / 255.0)
    # V = max(R, G, B) exactly, so read it from the source instead of the float plane
    value = GrayImage(image.pixels.max(axis=2))
    return HsvImage(hue=hsv[..., 0], saturation=hsv[..., 1], value=value)


def hsv_to_rgb(hsv: HsvImage) -> ColorImage:
    """Recombine HSV planes into an RGB image."""
    if hsv.hue.shape != hsv.value.pixels.shape:
        raise ImageFormatException("HSV planes must share dimensions")
    stacked = np.stack(
        [hsv.hue, hsv.saturation, hsv.value.pixels.astype(np.float64) / 255.0],
        axis=-1,
    )
    return ColorImage(quantize(hsv2rgb(stacked)))
