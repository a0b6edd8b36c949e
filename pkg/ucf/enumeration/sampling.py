import random
from typing import (
    Iterator,
    List
)

from ucf.common.types import Mask
from ucf.family import (
    SetFamily,
    family_from_generators
)

from .config import RandomConfig


def random_generators(cfg: RandomConfig) -> List[Mask]:
    """`generator_count` subsets drawn uniformly from the nonempty subsets
    of M_n, a deterministic function of the seed
    """

    rng = random.Random(cfg.seed)
    top = 1 << cfg.n

    return [rng.randrange(1, top) for _ in range(cfg.generator_count)]


def random_closed_family(cfg: RandomConfig) -> SetFamily:
    return family_from_generators(cfg.n, random_generators(cfg))


def random_closed_families(
    n: int,
    count: int,
    generator_count: int,
    seed: int = 0
) -> Iterator[SetFamily]:
    """`count` families, the k-th one sampled with seed `seed + k`
    """

    for k in range(count):
        yield random_closed_family(RandomConfig(
            n=n,
            generator_count=generator_count,
            seed=seed + k
        ))
