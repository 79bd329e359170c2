import logging

from src.core.exceptions import OptimizerException
from src.core.models import HyperParams, VariantId
from src.imaging.raster import Image

from .base import BaseOptimizer, GenerationObserver
from .genetic import CommaGeneticOptimizer, PlusGeneticOptimizer
from .hill_climbing import SimpleHillClimber, SplitGaussHillClimber, SplitTrapTriHillClimber
from .trace import RunTrace

logger = logging.getLogger(__name__)

BUILTIN_OPTIMIZERS: tuple[type[BaseOptimizer], ...] = (
    SimpleHillClimber,
    SplitTrapTriHillClimber,
    SplitGaussHillClimber,
    CommaGeneticOptimizer,
    PlusGeneticOptimizer,
)


class VariantRegistry:
    """
    Manages the registration and retrieval of optimizer variants.
    """

    def __init__(self, optimizers: tuple[type[BaseOptimizer], ...] = BUILTIN_OPTIMIZERS):
        self._optimizers: dict[VariantId, BaseOptimizer] = {}
        for optimizer_class in optimizers:
            self.register(optimizer_class)
        logger.debug(
            f"VariantRegistry initialized with {len(self._optimizers)} variants: "
            f"{[str(v) for v in self._optimizers]}"
        )

    def register(self, optimizer_class: type[BaseOptimizer]):
        """Validate and register one optimizer class."""
        variant = getattr(optimizer_class, "variant", None)
        if not isinstance(variant, VariantId):
            raise OptimizerException(
                f"{optimizer_class.__name__} missing or invalid 'variant' attribute"
            )
        if not isinstance(getattr(optimizer_class, "description", None), str):
            raise OptimizerException(
                f"{optimizer_class.__name__} missing or invalid 'description' attribute"
            )
        if variant in self._optimizers:
            logger.warning(f"Variant conflict: '{variant}' already registered. Overwriting.")
        self._optimizers[variant] = optimizer_class()

    def get(self, variant: VariantId | str) -> BaseOptimizer:
        """
        Retrieve an optimizer by variant id.

        Raises:
            OptimizerException: If the variant is unknown or not registered
        """
        try:
            key = VariantId(variant)
        except ValueError:
            key = None
        optimizer = self._optimizers.get(key) if key else None
        if optimizer is None:
            available = [str(v) for v in self._optimizers]
            raise OptimizerException(
                f"Variant '{variant}' not found in registry. Available variants: {available}"
            )
        return optimizer

    def run(
        self,
        image: Image,
        variant: VariantId | str,
        hp: HyperParams,
        seed: int | None = None,
        observer: GenerationObserver | None = None,
    ) -> RunTrace:
        return self.get(variant).run(image, hp, seed, observer)

    def list_variants(self) -> dict[str, str]:
        """Mapping of variant ids to descriptions."""
        return {str(v): opt.description for v, opt in self._optimizers.items()}

    def __len__(self) -> int:
        return len(self._optimizers)


variant_registry = VariantRegistry()
