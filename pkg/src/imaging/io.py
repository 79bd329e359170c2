"""
Image file I/O (PNG and binary PGM/PPM, 8 bits per channel) through Pillow.
"""

from pathlib import Path

import numpy as np
import structlog
from PIL import Image as PILImage
from PIL import UnidentifiedImageError

from src.core.exceptions import ImageFormatException, ImageIOException

from .raster import ColorImage, GrayImage, Image

logger = structlog.get_logger(__name__)

# Pillow reports both PGM and PPM as "PPM"
SUPPORTED_FORMATS = {"PNG", "PPM"}
_SAVE_FORMATS = {".png": "PNG", ".pgm": "PPM", ".ppm": "PPM"}


def load_image(path: str | Path) -> Image:
    """
    Load a PNG, PGM or PPM file.

    Returns a GrayImage for single-channel sources and a ColorImage otherwise.
    Palette images are expanded to RGB; 16-bit and alpha sources are rejected.
    """
    path = Path(path)
    if not path.exists():
        raise ImageIOException("file not found", str(path))
    if not path.is_file():
        raise ImageIOException("not a regular file", str(path))

    try:
        with PILImage.open(path) as handle:
            image_format = handle.format
            if image_format not in SUPPORTED_FORMATS:
                raise ImageIOException(
                    f"unsupported format {image_format!r}", str(path)
                )
            handle.load()
            mode = handle.mode
            if mode == "1":
                handle = handle.convert("L")
            elif mode == "P":
                handle = handle.convert("RGB")
            elif mode not in ("L", "RGB"):
                raise ImageIOException(f"unsupported pixel mode {mode!r}", str(path))
            pixels = np.array(handle, dtype=np.uint8)
    except UnidentifiedImageError as e:
        raise ImageIOException("unsupported format", str(path)) from e
    except ImageIOException:
        raise
    except (OSError, SyntaxError, ValueError) as e:
        # Pillow raises SyntaxError for malformed PPM headers
        raise ImageIOException(f"corrupt image ({e})", str(path)) from e

    logger.debug(
        "Image loaded", path=str(path), format=image_format, shape=pixels.shape
    )
    if pixels.ndim == 2:
        return GrayImage(pixels)
    return ColorImage(pixels)


def save_image(image: Image, path: str | Path) -> Path:
    """Write an image; the format follows the file suffix (.png, .pgm, .ppm)."""
    path = Path(path)
    image_format = _SAVE_FORMATS.get(path.suffix.lower())
    if image_format is None:
        raise ImageIOException(f"unsupported output suffix {path.suffix!r}", str(path))
    if path.suffix.lower() == ".pgm" and not isinstance(image, GrayImage):
        raise ImageFormatException("PGM output needs a grayscale image")
    if path.suffix.lower() == ".ppm" and not isinstance(image, ColorImage):
        raise ImageFormatException("PPM output needs a color image")

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        PILImage.fromarray(np.asarray(image.pixels)).save(
            path, format=image_format
        )
    except OSError as e:
        raise ImageIOException(f"cannot write image ({e})", str(path)) from e

    logger.debug("Image saved", path=str(path), format=image_format)
    return path
