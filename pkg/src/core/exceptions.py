# src/core/exceptions.py


class FuzzyContrastException(Exception):
    """Base exception for all application-specific errors."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class ImageException(FuzzyContrastException):
    """Base exception for errors related to the image domain."""

    pass


class ImageIOException(ImageException):
    """Raised when an image file cannot be read or written."""

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        super().__init__(f"{message}: {path}" if path else message)


class ImageFormatException(ImageException):
    """Raised for rasters that violate dimension, dtype or channel rules."""

    pass


class GenomeException(FuzzyContrastException):
    """Raised when a membership function or genome violates its invariants."""

    pass


class TransformException(FuzzyContrastException):
    """Raised for errors while realizing or applying a transfer LUT."""

    pass


class OptimizerException(FuzzyContrastException):
    """Base exception for errors related to the optimizer domain."""

    pass


class ConfigurationException(FuzzyContrastException):
    """Raised for invalid settings, hyperparameters or experiment configs."""

    pass


class BenchmarkException(FuzzyContrastException):
    """Raised when a benchmark cannot be started or its report assembled."""

    pass
