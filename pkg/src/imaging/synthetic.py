"""
Synthetic test images. They stand in for a photographic corpus in tests and
in the `corpus` command.
"""

from pathlib import Path

import numpy as np

from .io import save_image
from .raster import ColorImage, GrayImage


def checkerboard(size: int = 8, low: int = 0, high: int = 255) -> GrayImage:
    """One-pixel checkerboard alternating between two levels."""
    rows, cols = np.indices((size, size))
    return GrayImage(np.where((rows + cols) % 2 == 0, low, high).astype(np.uint8))


def step_edge(
    width: int = 4, height: int = 4, low: int = 0, high: int = 255
) -> GrayImage:
    """Vertical step: the left half at `low`, the right half at `high`."""
    pixels = np.full((height, width), low, dtype=np.uint8)
    pixels[:, width // 2 :] = high
    return GrayImage(pixels)


def random_image(size: int = 16, seed: int = 0) -> GrayImage:
    rng = np.random.default_rng(seed)
    return GrayImage(rng.integers(0, 256, size=(size, size), dtype=np.uint8))


def compress_range(image: GrayImage, low: int, high: int) -> GrayImage:
    """Linearly squeeze intensities into [low, high]."""
    data = image.pixels.astype(np.float64)
    span = data.max() - data.min()
    unit = (data - data.min()) / span if span > 0 else np.zeros_like(data)
    return GrayImage(np.floor(low + unit * (high - low) + 0.5).astype(np.uint8))


def low_contrast_scene(
    size: int = 64, low: int = 100, high: int = 156, seed: int = 0
) -> GrayImage:
    """
    A scene with a gradient background, a few discs and bars, and mild noise,
    compressed into [low, high].
    """
    rng = np.random.default_rng(seed)
    rows, cols = np.indices((size, size)).astype(np.float64)
    scene = 0.4 * cols / max(size - 1, 1)
    for _ in range(4):
        cy, cx = rng.uniform(0, size, size=2)
        radius = rng.uniform(size / 10, size / 4)
        scene[(rows - cy) ** 2 + (cols - cx) ** 2 <= radius**2] += rng.uniform(
            0.2, 0.6
        )
    bar = int(rng.integers(size // 8, size // 2))
    scene[:, bar : bar + max(size // 16, 1)] -= 0.3
    scene += rng.normal(0.0, 0.02, size=scene.shape)
    span = scene.max() - scene.min()
    unit = (scene - scene.min()) / span
    return compress_range(GrayImage(np.floor(unit * 255 + 0.5).astype(np.uint8)), low, high)


def color_scene(size: int = 32, seed: int = 0) -> ColorImage:
    """A dim color image: each channel a shifted low-contrast scene."""
    channels = [
        low_contrast_scene(size, low=40 + 10 * i, high=120 + 10 * i, seed=seed + i).pixels
        for i in range(3)
    ]
    return ColorImage(np.stack(channels, axis=-1))


def write_corpus(directory: str | Path, seed: int = 0) -> list[Path]:
    """Write the synthetic corpus used by the benchmark examples."""
    directory = Path(directory)
    return [
        save_image(low_contrast_scene(64, seed=seed), directory / "scene_gray.png"),
        save_image(
            low_contrast_scene(64, low=20, high=90, seed=seed + 1),
            directory / "scene_dark.pgm",
        ),
        save_image(color_scene(48, seed=seed), directory / "scene_color.png"),
        save_image(checkerboard(16, 60, 190), directory / "checker.png"),
    ]
