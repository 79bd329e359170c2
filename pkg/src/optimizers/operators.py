"""
Variation operators on genomes. Every operator repairs its output back into
the membership and genome invariants instead of rejecting it.
"""

import numpy as np

from src.core.exceptions import OptimizerException
from src.core.models import HyperParams
from src.fuzzy.genome import Genome
from src.fuzzy.membership import (
    Family,
    MembershipFunction,
    gaussian,
    repair,
    shoulder_left,
    shoulder_right,
    sigmoid,
    triangle,
)


def substream(seed: int, generation: int, index: int) -> np.random.Generator:
    """Independent generator for one candidate of one generation."""
    return np.random.default_rng([seed, generation, index])


def _perturbation(hp: HyperParams, rng: np.random.Generator) -> float:
    # MutateMu is a step size; the direction is a fair coin
    sign = 1.0 if rng.random() < 0.5 else -1.0
    return float(rng.normal(hp.mutate_mu * sign, hp.mutate_sigma))


def perturb(
    fn: MembershipFunction, hp: HyperParams, rng: np.random.Generator
) -> MembershipFunction:
    """Move both shape values (and the target unless frozen) by one draw each."""
    changes = {
        "p1": fn.p1 + _perturbation(hp, rng),
        "p2": fn.p2 + _perturbation(hp, rng),
    }
    if not hp.freeze_targets:
        changes["v"] = fn.v + _perturbation(hp, rng)
    return fn.with_params(**changes)


def shape_mutate(genome: Genome, hp: HyperParams, rng: np.random.Generator) -> Genome:
    """Tweak each function independently with probability ChangeProb."""
    functions = [
        repair(perturb(fn, hp, rng)) if rng.random() < hp.change_prob else fn
        for fn in genome
    ]
    return Genome.from_functions(functions)


def ga_mutate(genome: Genome, hp: HyperParams, rng: np.random.Generator) -> Genome:
    """GA mutation: shape changes only, the genome length never changes."""
    return shape_mutate(genome, hp, rng)


def split_function(fn: MembershipFunction) -> tuple[MembershipFunction, MembershipFunction]:
    """
    Replace one function by two covering the halves of its support. Both
    halves keep the original target v.
    """
    p1, p2, v = fn.p1, fn.p2, fn.v
    match fn.family:
        case Family.TRIANGLE:
            halves = (triangle(p1 - p2 / 2, p2 / 2, v), triangle(p1 + p2 / 2, p2 / 2, v))
        case Family.GAUSSIAN:
            halves = (gaussian(p1 - p2, p2 / 2, v), gaussian(p1 + p2, p2 / 2, v))
        case Family.SHOULDER_LEFT:
            mid = (p1 + p2) / 2
            halves = (shoulder_left(p1, mid, v), triangle((mid + p2) / 2, (p2 - p1) / 2, v))
        case Family.SHOULDER_RIGHT:
            mid = (p1 + p2) / 2
            halves = (triangle((p1 + mid) / 2, (p2 - p1) / 2, v), shoulder_right(mid, p2, v))
        case Family.SIGMOID:
            # transition width of a logistic curve is about 2 / |slope|
            half = 1.0 / abs(p2)
            if p2 > 0:
                halves = (gaussian(p1 - half, half, v), sigmoid(p1 + half, p2, v))
            else:
                halves = (sigmoid(p1 - half, p2, v), gaussian(p1 + half, half, v))
    return repair(halves[0]), repair(halves[1])


def split_at(genome: Genome, index: int) -> Genome:
    functions = list(genome.functions)
    left, right = split_function(functions[index])
    functions[index : index + 1] = [left, right]
    return Genome.from_functions(functions)


def split_mutate(genome: Genome, hp: HyperParams, rng: np.random.Generator) -> Genome:
    """
    With probability MembershipSplitProb split one uniformly chosen function,
    otherwise fall back to shape mutation. A genome already at max_functions
    is never split.
    """
    if hp.membership_split_prob > 0.0 and len(genome) < hp.max_functions:
        if rng.random() < hp.membership_split_prob:
            return split_at(genome, int(rng.integers(len(genome))))
    return shape_mutate(genome, hp, rng)


def uniform_crossover(
    a: Genome, b: Genome, p: float, rng: np.random.Generator
) -> tuple[Genome, Genome]:
    """Walk both parents position by position, swapping on a p-weighted coin."""
    if len(a) != len(b):
        raise OptimizerException(
            f"crossover needs parents of equal length, got {len(a)} and {len(b)}"
        )
    first, second = list(a.functions), list(b.functions)
    for i in range(len(first)):
        if rng.random() < p:
            first[i], second[i] = second[i], first[i]
    return Genome.from_functions(first), Genome.from_functions(second)


def tournament_select(
    scores: list[float], size: int, rng: np.random.Generator
) -> int:
    """Index of the fittest of `size` uniformly drawn contestants."""
    contestants = rng.integers(len(scores), size=size)
    return int(max(contestants, key=lambda i: (scores[i], -i)))
