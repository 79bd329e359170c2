"""
Membership-function families.

Each function is the three-value tuple (p1, p2, v) plus a family tag: p1 and
p2 describe the shape, v is the crisp target used during defuzzification.
"""

from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.special import expit

INTENSITY_MAX = 255.0
MIN_WIDTH = 1.0
MIN_SLOPE = 0.01
MAX_SLOPE = 5.0


class Family(StrEnum):
    SHOULDER_LEFT = "shoulder-left"
    SHOULDER_RIGHT = "shoulder-right"
    TRIANGLE = "triangle"
    GAUSSIAN = "gaussian"
    SIGMOID = "sigmoid"


# tie-break order when two functions share a center
FAMILY_ORDER = {family: i for i, family in enumerate(Family)}


class MembershipFunction(BaseModel):
    """One fuzzy set over the intensity axis."""

    model_config = ConfigDict(frozen=True)

    family: Family
    p1: float
    p2: float
    v: float

    @property
    def center(self) -> float:
        if self.family in (Family.SHOULDER_LEFT, Family.SHOULDER_RIGHT):
            return (self.p1 + self.p2) / 2.0
        return self.p1

    def sort_key(self) -> tuple:
        return (self.center, FAMILY_ORDER[self.family], self.p1, self.p2, self.v)

    def degree(self, z: np.ndarray | float) -> np.ndarray:
        """Membership degree in [0, 1] for one or many intensities."""
        z = np.asarray(z, dtype=np.float64)
        p1, p2 = self.p1, self.p2
        match self.family:
            case Family.TRIANGLE:
                mu = 1.0 - np.abs(z - p1) / p2
            case Family.SHOULDER_LEFT:
                mu = (p2 - z) / (p2 - p1)
            case Family.SHOULDER_RIGHT:
                mu = (z - p1) / (p2 - p1)
            case Family.GAUSSIAN:
                mu = np.exp(-((z - p1) ** 2) / (2.0 * p2**2))
            case Family.SIGMOID:
                mu = expit(p2 * (z - p1))
        return np.clip(mu, 0.0, 1.0)

    def with_params(self, **changes: float) -> "MembershipFunction":
        return self.model_copy(update=changes)


def repair(fn: MembershipFunction) -> MembershipFunction:
    """Clamp a function back into its family's invariants. Total: never rejects."""
    p1, p2 = float(fn.p1), float(fn.p2)
    v = float(np.clip(fn.v, 0.0, INTENSITY_MAX))
    match fn.family:
        case Family.TRIANGLE | Family.GAUSSIAN:
            p1 = float(np.clip(p1, 0.0, INTENSITY_MAX))
            p2 = float(np.clip(p2, MIN_WIDTH, INTENSITY_MAX))
        case Family.SIGMOID:
            p1 = float(np.clip(p1, 0.0, INTENSITY_MAX))
            sign = -1.0 if p2 < 0 else 1.0
            p2 = sign * float(np.clip(abs(p2), MIN_SLOPE, MAX_SLOPE))
        case Family.SHOULDER_LEFT | Family.SHOULDER_RIGHT:
            p1 = float(np.clip(p1, 0.0, INTENSITY_MAX))
            p2 = float(np.clip(p2, 0.0, INTENSITY_MAX))
            if p1 > p2:
                p1, p2 = p2, p1
            if p2 - p1 < MIN_WIDTH:
                if p1 + MIN_WIDTH <= INTENSITY_MAX:
                    p2 = p1 + MIN_WIDTH
                else:
                    p1 = p2 - MIN_WIDTH
    return MembershipFunction(family=fn.family, p1=p1, p2=p2, v=v)


def shoulder_left(p1: float, p2: float, v: float) -> MembershipFunction:
    return MembershipFunction(family=Family.SHOULDER_LEFT, p1=p1, p2=p2, v=v)


def shoulder_right(p1: float, p2: float, v: float) -> MembershipFunction:
    return MembershipFunction(family=Family.SHOULDER_RIGHT, p1=p1, p2=p2, v=v)


def triangle(center: float, half_width: float, v: float) -> MembershipFunction:
    return MembershipFunction(family=Family.TRIANGLE, p1=center, p2=half_width, v=v)


def gaussian(mean: float, sigma: float, v: float) -> MembershipFunction:
    return MembershipFunction(family=Family.GAUSSIAN, p1=mean, p2=sigma, v=v)


def sigmoid(center: float, slope: float, v: float) -> MembershipFunction:
    return MembershipFunction(family=Family.SIGMOID, p1=center, p2=slope, v=v)
