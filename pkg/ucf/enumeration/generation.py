import itertools
import logging
from typing import (
    Iterator,
    List,
    Set
)

from ucf.common.constants import EnumMode
from ucf.common.exceptions import InvalidConfigException
from ucf.common.types import Masks
from ucf.common.utils import format_msg
from ucf.family import (
    GroundSet,
    SetFamily,
    canonical_masks
)

from .config import EnumConfig


logger = logging.getLogger(__name__)


def _extend(masks: Masks, s: int) -> Masks:
    # closure of a union-closed family plus one set
    extended = set(masks)
    extended.add(s)
    extended.update(s | m for m in masks)
    return tuple(sorted(extended))


def iter_canonical_masks(cfg: EnumConfig) -> Iterator[Masks]:
    """One canonical member tuple per relabeling class of union-closed
    families, in breadth-first discovery order, unfiltered.

    Every union-closed family is reached by adding its members one at a
    time, each prefix closure being a union-closed subfamily, so expanding
    the canonical representatives by one set at a time covers every class.
    """

    n = cfg.n
    subsets = range(0 if cfg.allow_empty_member else 1, 1 << n)

    seen: Set[Masks] = set()
    level: List[Masks] = []

    for s in subsets:
        rep = canonical_masks((s,), n)
        if rep not in seen:
            seen.add(rep)
            level.append(rep)
            yield rep

    depth = 1

    while level:
        logger.info(format_msg(
            'generation level %s: %s classes, %s seen',
            depth, len(level), len(seen)
        ))

        next_level = []

        for masks in level:
            members = set(masks)

            for s in subsets:
                if s in members:
                    continue

                rep = canonical_masks(_extend(masks, s), n)

                if rep not in seen:
                    seen.add(rep)
                    next_level.append(rep)
                    yield rep

        level = next_level
        depth += 1


def enumerate_canonical(cfg: EnumConfig) -> Iterator[SetFamily]:
    """One representative per isomorphism class of accepted union-closed
    families, stopping after `cfg.limit` yields
    """

    if cfg.mode is not EnumMode.CANONICAL:
        raise InvalidConfigException(
            'mode',
            f'canonical enumeration needs mode "canonical", got "{cfg.mode}"'
        )

    ground = GroundSet(cfg.n)

    def accepted() -> Iterator[SetFamily]:
        for masks in iter_canonical_masks(cfg):
            union = 0
            for mask in masks:
                union |= mask

            if cfg.accepts(masks, union):
                yield SetFamily.from_sorted(ground, masks, True)

    families = accepted()

    if cfg.limit is not None:
        families = itertools.islice(families, cfg.limit)

    yield from families
