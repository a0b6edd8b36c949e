from dataclasses import dataclass
from typing import (
    Iterable,
    Iterator,
    List
)

from ucf.common.constants import MAX_GROUND_SIZE
from ucf.common.exceptions import (
    InvalidGroundSetException,
    ElementOutOfRangeException
)
from ucf.common.utils import (
    popcount,
    iter_elements,
    mask_of,
    format_mask
)


@dataclass(frozen=True)
class GroundSet:
    """The ground set M_n = {1, ..., n}
    """

    n: int

    def __post_init__(self) -> None:
        if (
            type(self.n) is not int
            or not 1 <= self.n <= MAX_GROUND_SIZE
        ):
            raise InvalidGroundSetException(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def check_element(self, e: int) -> int:
        if type(e) is not int or not 1 <= e <= self.n:
            raise ElementOutOfRangeException(e, self.n)
        return e

    def check_mask(self, mask: int) -> int:
        if mask < 0 or mask >> self.n:
            # Report the smallest offending element
            outside = mask & ~self.full_mask
            e = (outside & -outside).bit_length() if mask >= 0 else mask
            raise ElementOutOfRangeException(e, self.n)
        return mask


@dataclass(frozen=True, order=True)
class ElementSet:
    """A subset of M_n stored as a bitmask, element e is bit e - 1.

    Ordering follows the bitmask value, which is also the order of the
    members of a `SetFamily`.
    """

    bits: int
    n: int

    def __post_init__(self) -> None:
        GroundSet(self.n).check_mask(self.bits)

    @classmethod
    def of(
        cls,
        n: int,
        elements: Iterable[int]
    ) -> 'ElementSet':
        ground = GroundSet(n)
        elements = list(elements)
        for e in elements:
            ground.check_element(e)
        return cls(mask_of(elements), n)

    def cardinality(self) -> int:
        return popcount(self.bits)

    def elements(self) -> List[int]:
        return list(iter_elements(self.bits))

    def without(self, e: int) -> 'ElementSet':
        return ElementSet(self.bits & ~(1 << (e - 1)), self.n)

    def __contains__(self, e: int) -> bool:
        return 1 <= e <= self.n and bool(self.bits >> (e - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_elements(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __or__(self, other: 'ElementSet') -> 'ElementSet':
        return ElementSet(self.bits | other.bits, max(self.n, other.n))

    def __str__(self) -> str:
        return format_mask(self.bits)
