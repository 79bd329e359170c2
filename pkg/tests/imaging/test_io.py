import tempfile
import unittest
from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from src.core.exceptions import ImageFormatException, ImageIOException
from src.imaging.io import load_image, save_image
from src.imaging.raster import ColorImage, GrayImage


class TestLoadImage(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_hand_written_pgm(self):
        path = self.dir / "tiny.pgm"
        path.write_bytes(b"P5\n2 2\n255\n" + bytes([0, 255, 128, 64]))

        image = load_image(path)

        self.assertIsInstance(image, GrayImage)
        self.assertEqual((image.width, image.height), (2, 2))
        self.assertEqual(image.pixels.ravel().tolist(), [0, 255, 128, 64])

    def test_missing_file(self):
        path = self.dir / "nope.png"
        with self.assertRaises(ImageIOException) as ctx:
            load_image(path)
        self.assertIn("file not found", str(ctx.exception))
        self.assertEqual(ctx.exception.path, str(path))

    def test_color_png_matches_writer(self):
        rng = np.random.default_rng(3)
        pixels = rng.integers(0, 256, size=(5, 7, 3), dtype=np.uint8)
        path = self.dir / "color.png"
        PILImage.fromarray(pixels).save(path)

        image = load_image(path)

        self.assertIsInstance(image, ColorImage)
        self.assertEqual((image.width, image.height), (7, 5))
        np.testing.assert_array_equal(image.pixels, pixels)

    def test_unsupported_format(self):
        path = self.dir / "image.bmp"
        PILImage.fromarray(np.zeros((4, 4), dtype=np.uint8)).save(path)
        with self.assertRaises(ImageIOException) as ctx:
            load_image(path)
        self.assertIn("unsupported format", str(ctx.exception))

    def test_not_an_image(self):
        path = self.dir / "notes.png"
        path.write_text("definitely not a PNG")
        with self.assertRaises(ImageIOException) as ctx:
            load_image(path)
        self.assertIn(str(path), str(ctx.exception))

    def test_truncated_pgm_reports_path(self):
        path = self.dir / "short.pgm"
        path.write_bytes(b"P5\n4 4\n255\n" + bytes([1, 2, 3]))
        with self.assertRaises(ImageIOException) as ctx:
            load_image(path)
        self.assertIn(str(path), str(ctx.exception))


class TestSaveImage(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_gray_round_trip_through_pgm_and_png(self):
        image = GrayImage(np.arange(12, dtype=np.uint8).reshape(3, 4) * 20)
        for name in ("out.pgm", "nested/out.png"):
            self.assertEqual(load_image(save_image(image, self.dir / name)), image)

    def test_color_round_trip_through_ppm(self):
        image = ColorImage(np.full((2, 3, 3), (10, 20, 30), dtype=np.uint8))
        self.assertEqual(load_image(save_image(image, self.dir / "out.ppm")), image)

    def test_pgm_requires_gray(self):
        image = ColorImage(np.zeros((2, 2, 3), dtype=np.uint8))
        with self.assertRaises(ImageFormatException):
            save_image(image, self.dir / "out.pgm")

    def test_unknown_suffix(self):
        image = GrayImage(np.zeros((2, 2), dtype=np.uint8))
        with self.assertRaises(ImageIOException):
            save_image(image, self.dir / "out.jpg")


if __name__ == "__main__":
    unittest.main()
