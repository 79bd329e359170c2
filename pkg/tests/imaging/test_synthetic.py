import tempfile
import unittest
from pathlib import Path

import numpy as np

from src.imaging.io import load_image
from src.imaging.raster import ColorImage, GrayImage
from src.imaging.synthetic import (
    checkerboard,
    color_scene,
    low_contrast_scene,
    random_image,
    step_edge,
    write_corpus,
)


class TestSynthetic(unittest.TestCase):
    def test_checkerboard_alternates(self):
        board = checkerboard(4, 10, 200)
        self.assertEqual(int(board.pixels[0, 0]), 10)
        self.assertEqual(int(board.pixels[0, 1]), 200)
        self.assertEqual(int(board.pixels[1, 0]), 200)
        self.assertEqual(set(np.unique(board.pixels).tolist()), {10, 200})

    def test_step_edge_right_half_high(self):
        edge = step_edge(4, 2, 0, 128)
        np.testing.assert_array_equal(edge.pixels, [[0, 0, 128, 128], [0, 0, 128, 128]])

    def test_random_image_is_seeded(self):
        self.assertEqual(random_image(16, seed=4), random_image(16, seed=4))
        self.assertNotEqual(random_image(16, seed=4), random_image(16, seed=5))

    def test_low_contrast_scene_occupies_its_range(self):
        scene = low_contrast_scene(32, low=100, high=156, seed=0)
        self.assertEqual(int(scene.pixels.min()), 100)
        self.assertEqual(int(scene.pixels.max()), 156)

    def test_color_scene_shape(self):
        scene = color_scene(12, seed=1)
        self.assertIsInstance(scene, ColorImage)
        self.assertEqual((scene.width, scene.height), (12, 12))

    def test_write_corpus(self):
        with tempfile.TemporaryDirectory() as tmp:
            paths = write_corpus(Path(tmp) / "corpus", seed=3)
            self.assertEqual(len(paths), 4)
            images = [load_image(p) for p in paths]
        self.assertIsInstance(images[0], GrayImage)
        self.assertIsInstance(images[2], ColorImage)


if __name__ == "__main__":
    unittest.main()
