import itertools
from functools import lru_cache
from typing import (
    Iterable,
    Tuple
)

from ucf.common.constants import (
    MAX_CANONICAL_N,
    MAX_TABLE_N
)
from ucf.common.exceptions import CanonicalizationLimitException
from ucf.common.types import (
    Mask,
    Masks
)


Images = Tuple[Mask, ...]


@lru_cache(maxsize=None)
def permutation_images(n: int) -> Tuple[Images, ...]:
    """For every permutation p of the n bit positions, the tuple of
    single-bit images `1 << p[b]`, in `itertools.permutations` order
    """

    return tuple(
        tuple(1 << p for p in perm)
        for perm in itertools.permutations(range(n))
    )


@lru_cache(maxsize=MAX_TABLE_N + 1)
def permutation_tables(n: int) -> Tuple[Tuple[Mask, ...], ...]:
    """Full image tables, `tables[p][mask]` is mask relabeled by p
    """

    tables = []

    for images in permutation_images(n):
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] | images[low.bit_length() - 1]
        tables.append(tuple(table))

    return tuple(tables)


def permute_mask(mask: Mask, images: Images) -> Mask:
    image = 0
    b = 0
    while mask:
        if mask & 1:
            image |= images[b]
        mask >>= 1
        b += 1
    return image


def relabelings(masks: Iterable[Mask], n: int) -> Iterable[Masks]:
    """Sorted member tuples of every relabeling, with repetitions
    """

    masks = tuple(masks)

    if n <= MAX_TABLE_N:
        for table in permutation_tables(n):
            yield tuple(sorted(table[m] for m in masks))
        return

    for images in permutation_images(n):
        yield tuple(sorted(permute_mask(m, images) for m in masks))


def canonical_masks(masks: Iterable[Mask], n: int) -> Masks:
    """The lexicographically smallest sorted member tuple over all n!
    relabelings of M_n. Two families share it iff one is a relabeling of
    the other.
    """

    if n > MAX_CANONICAL_N:
        raise CanonicalizationLimitException(n, MAX_CANONICAL_N)

    return min(relabelings(masks, n))
