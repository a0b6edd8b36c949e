import itertools
from typing import (
    Iterator,
    List,
    Tuple
)

from ucf.common.constants import EnumMode
from ucf.common.exceptions import InvalidConfigException
from ucf.common.types import Masks
from ucf.family import (
    GroundSet,
    SetFamily
)

from .config import EnumConfig


# A candidate family is encoded as an integer whose bit s is set iff the
# subset with bitmask s is a member


def candidate_count(n: int) -> int:
    return 1 << (1 << n)


def _closed_code(code: int, masks: Masks) -> bool:
    for x, a in enumerate(masks):
        for b in masks[x + 1:]:
            if not code >> (a | b) & 1:
                return False
    return True


def iter_dense_masks(
    cfg: EnumConfig,
    start: int,
    stop: int
) -> Iterator[Masks]:
    """Member tuples of the accepted union-closed candidates with encoding
    in [start, stop), ascending
    """

    subsets = range(1 << cfg.n)

    for code in range(max(start, 1), stop):
        if code & 1 and not cfg.allow_empty_member:
            continue

        masks = tuple(s for s in subsets if code >> s & 1)

        if not _closed_code(code, masks):
            continue

        union = 0
        for mask in masks:
            union |= mask

        if cfg.accepts(masks, union):
            yield masks


def dense_partitions(cfg: EnumConfig, parts: int) -> List[Tuple[int, int]]:
    """Splits the candidate encodings into `parts` contiguous ranges
    """

    total = candidate_count(cfg.n)
    parts = max(1, min(parts, total))
    step = -(-total // parts)

    return [
        (lo, min(lo + step, total))
        for lo in range(0, total, step)
    ]


def enumerate_dense(cfg: EnumConfig) -> Iterator[SetFamily]:
    """Every accepted nonempty union-closed family over M_n, in ascending
    candidate encoding
    """

    if cfg.mode is not EnumMode.DENSE:
        raise InvalidConfigException(
            'mode', f'dense enumeration needs mode "dense", got "{cfg.mode}"')

    ground = GroundSet(cfg.n)
    masks_stream = iter_dense_masks(cfg, 1, candidate_count(cfg.n))

    if cfg.limit is not None:
        masks_stream = itertools.islice(masks_stream, cfg.limit)

    for masks in masks_stream:
        yield SetFamily.from_sorted(ground, masks, True)
