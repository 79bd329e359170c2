"""
Raster value types shared by the imaging, fuzzy and fitness packages.

Pixels are numpy arrays in row-major (height, width[, channel]) order. Every
raster is frozen and its buffer is marked read-only, so one image can be
shared across evaluation threads without copying.
"""

from dataclasses import dataclass

import numpy as np

from src.core.exceptions import ImageFormatException


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array)
    array.setflags(write=False)
    return array


def _to_uint8(pixels: np.ndarray, what: str) -> np.ndarray:
    """Round to the nearest level; out-of-range input is rejected, not wrapped."""
    if pixels.min() < 0 or pixels.max() > 255:
        raise ImageFormatException(f"{what} must lie in [0, 255]")
    return np.clip(np.rint(pixels), 0, 255).astype(np.uint8)


@dataclass(frozen=True)
class GrayImage:
    """Single-channel 8-bit image of size M (width) x N (height)."""

    pixels: np.ndarray

    def __post_init__(self):
        pixels = np.asarray(self.pixels)
        if pixels.ndim != 2:
            raise ImageFormatException(
                f"GrayImage needs a 2-D array, got shape {pixels.shape}"
            )
        if pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise ImageFormatException("GrayImage needs at least one pixel")
        if pixels.dtype != np.uint8:
            pixels = _to_uint8(pixels, "intensities")
        object.__setattr__(self, "pixels", _frozen(pixels))

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def size(self) -> int:
        return int(self.pixels.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True)
class ColorImage:
    """Three-channel 8-bit RGB image."""

    pixels: np.ndarray

    def __post_init__(self):
        pixels = np.asarray(self.pixels)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ImageFormatException(
                f"ColorImage needs an (N, M, 3) array, got shape {pixels.shape}"
            )
        if pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise ImageFormatException("ColorImage needs at least one pixel")
        if pixels.dtype != np.uint8:
            pixels = _to_uint8(pixels, "channel values")
        object.__setattr__(self, "pixels", _frozen(pixels))

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColorImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True)
class GradientField:
    """Non-negative real gradient magnitudes, same dimensions as the source."""

    magnitudes: np.ndarray

    def __post_init__(self):
        magnitudes = np.asarray(self.magnitudes, dtype=np.float64)
        if magnitudes.ndim != 2:
            raise ImageFormatException("GradientField needs a 2-D array")
        if np.any(magnitudes < 0):
            raise ImageFormatException("gradient magnitudes must be non-negative")
        object.__setattr__(self, "magnitudes", _frozen(magnitudes))

    @property
    def width(self) -> int:
        return int(self.magnitudes.shape[1])

    @property
    def height(self) -> int:
        return int(self.magnitudes.shape[0])


@dataclass(frozen=True)
class HsvImage:
    """
    HSV planes of a color image. Hue and saturation stay float64 in [0, 1] so
    that recombining an unmodified value plane reproduces the source RGB.
    """

    hue: np.ndarray
    saturation: np.ndarray
    value: GrayImage

    def __post_init__(self):
        hue = np.asarray(self.hue, dtype=np.float64)
        saturation = np.asarray(self.saturation, dtype=np.float64)
        shape = self.value.pixels.shape
        if hue.shape != shape or saturation.shape != shape:
            raise ImageFormatException(
                f"HSV planes differ in shape: {hue.shape}, {saturation.shape}, {shape}"
            )
        object.__setattr__(self, "hue", _frozen(hue))
        object.__setattr__(self, "saturation", _frozen(saturation))

    def with_value(self, value: GrayImage) -> "HsvImage":
        return HsvImage(hue=self.hue, saturation=self.saturation, value=value)


Image = GrayImage | ColorImage
