from dataclasses import dataclass
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Tuple,
    Union
)

import numpy as np

from ucf.common.exceptions import (
    EmptyFamilyException,
    NotUnionClosedException
)
from ucf.common.ratio import Ratio
from ucf.common.types import (
    Mask,
    Masks
)
from ucf.common.utils import (
    popcount,
    mask_of,
    format_mask
)

from .ground import (
    GroundSet,
    ElementSet
)
from .canonical import canonical_masks


MemberLike = Union[int, ElementSet]


@dataclass(frozen=True)
class FrequencyProfile:
    """Per-element membership counts of a family.

    `counts[e - 1]` is the number of members containing e, `order` lists the
    elements by non-increasing count, ties broken by the smaller element.
    """

    total: int
    counts: Tuple[int, ...]
    order: Tuple[int, ...]

    @classmethod
    def from_counts(
        cls,
        total: int,
        counts: Iterable[int]
    ) -> 'FrequencyProfile':
        counts = tuple(int(c) for c in counts)
        order = tuple(sorted(
            range(1, len(counts) + 1),
            key=lambda e: (-counts[e - 1], e)
        ))
        return cls(total, counts, order)

    def count(self, e: int) -> int:
        return self.counts[e - 1]

    def ratio(self, e: int) -> Ratio:
        return Ratio(self.counts[e - 1], self.total)

    def ranked(self, k: int) -> int:
        """The element of rank k, rank 1 being the most frequent
        """

        return self.order[k - 1]

    def is_abundant(self, e: int) -> bool:
        return 2 * self.counts[e - 1] >= self.total

    def abundant(self) -> List[int]:
        return [
            e for e in range(1, len(self.counts) + 1)
            if self.is_abundant(e)
        ]

    def to_json(self) -> dict:
        return dict(
            total=self.total,
            counts=list(self.counts),
            order=list(self.order)
        )


class SetFamily:
    """A nonempty family of distinct subsets of M_n.

    Members are kept as bitmasks in strictly increasing order. The family is
    immutable, only the union-closure status and the frequency profile are
    cached after they are first computed::

        f = SetFamily.of(3, [[1], [2], [1, 2]])
        f.is_union_closed()  # True
    """

    __slots__ = (
        '_ground',
        '_masks',
        '_index',
        '_closed',
        '_profile'
    )

    _ground: GroundSet
    _masks: Masks
    _index: Optional[FrozenSet[Mask]]
    _closed: Optional[bool]
    _profile: Optional[FrequencyProfile]

    def __init__(
        self,
        ground: Union[int, GroundSet],
        members: Iterable[MemberLike],
        closed: Optional[bool] = None
    ) -> None:
        if not isinstance(ground, GroundSet):
            ground = GroundSet(ground)

        masks = set()
        for member in members:
            mask = member.bits if isinstance(member, ElementSet) else member
            masks.add(ground.check_mask(mask))

        if not masks:
            raise EmptyFamilyException()

        self._init(ground, tuple(sorted(masks)), closed)

    def _init(
        self,
        ground: GroundSet,
        masks: Masks,
        closed: Optional[bool]
    ) -> None:
        self._ground = ground
        self._masks = masks
        self._index = None
        self._closed = closed
        self._profile = None

    @classmethod
    def from_sorted(
        cls,
        ground: GroundSet,
        masks: Masks,
        closed: Optional[bool] = None
    ) -> 'SetFamily':
        # `masks` must already be strictly increasing and inside M_n
        family = cls.__new__(cls)
        family._init(ground, masks, closed)
        return family

    @classmethod
    def of(
        cls,
        n: int,
        sets: Iterable[Iterable[int]]
    ) -> 'SetFamily':
        """Creates a family from element lists, e.g. `[[], [1], [1, 2]]`
        """

        return cls(n, [ElementSet.of(n, s) for s in sets])

    @classmethod
    def power_set(
        cls,
        n: int,
        k: Optional[int] = None,
        with_empty: bool = True
    ) -> 'SetFamily':
        """The power set of {1, ..., k} over the ground set M_n
        """

        k = n if k is None else k
        start = 0 if with_empty else 1
        return cls.from_sorted(
            GroundSet(n),
            tuple(range(start, 1 << k)),
            True
        )

    # -------------------------------------------------
    # Container protocol

    @property
    def ground(self) -> GroundSet:
        return self._ground

    @property
    def n(self) -> int:
        return self._ground.n

    @property
    def masks(self) -> Masks:
        return self._masks

    @property
    def index(self) -> FrozenSet[Mask]:
        if self._index is None:
            self._index = frozenset(self._masks)
        return self._index

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self) -> Iterator[ElementSet]:
        n = self.n
        return (ElementSet(mask, n) for mask in self._masks)

    def __contains__(self, member: MemberLike) -> bool:
        mask = member.bits if isinstance(member, ElementSet) else member
        return mask in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented

        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f'SetFamily({self.n}, {list(self._masks)})'

    def __str__(self) -> str:
        return '{' + ', '.join(format_mask(m) for m in self._masks) + '}'

    # -------------------------------------------------
    # Union-closure

    @property
    def closed(self) -> Optional[bool]:
        """The cached closure status, `None` if never computed
        """

        return self._closed

    def find_closure_violation(self) -> Optional[Tuple[Mask, Mask]]:
        """Returns the first pair (A, B) of members whose union is missing
        """

        index = self.index
        masks = self._masks

        for x, a in enumerate(masks):
            for b in masks[x + 1:]:
                if a | b not in index:
                    return a, b

        return None

    def is_union_closed(self) -> bool:
        if self._closed is None:
            self._closed = self.find_closure_violation() is None

        return self._closed

    def require_union_closed(self) -> 'SetFamily':
        if self._closed:
            return self

        pair = self.find_closure_violation()
        self._closed = pair is None

        if pair is not None:
            raise NotUnionClosedException(pair)

        return self

    def union_closure(self) -> 'SetFamily':
        """The smallest union-closed family containing this one
        """

        if self._closed:
            return self

        closure = union_closure_masks(self._masks)

        if len(closure) == len(self._masks):
            self._closed = True
            return self

        return SetFamily.from_sorted(
            self._ground,
            tuple(sorted(closure)),
            True
        )

    # -------------------------------------------------
    # Unions, sizes and frequencies

    @property
    def union_mask(self) -> Mask:
        union = 0
        for mask in self._masks:
            union |= mask
        return union

    def ground_union(self) -> ElementSet:
        return ElementSet(self.union_mask, self.n)

    def is_spanning(self) -> bool:
        return self.union_mask == self._ground.full_mask

    def is_trivial(self) -> bool:
        """Whether the family is {∅}
        """

        return self._masks == (0,)

    def t_value(self) -> Optional[int]:
        """The minimum size of a nonempty member, `None` for {∅}
        """

        sizes = [popcount(mask) for mask in self._masks if mask]
        return min(sizes) if sizes else None

    def incidence(self) -> np.ndarray:
        """The |F| x n 0/1 membership matrix, column e - 1 for element e
        """

        masks = np.array(self._masks, dtype=np.int64)
        shifts = np.arange(self.n, dtype=np.int64)
        return (masks[:, None] >> shifts[None, :]) & 1

    def frequency_profile(self) -> FrequencyProfile:
        if self._profile is None:
            self._profile = FrequencyProfile.from_counts(
                len(self._masks),
                self.incidence().sum(axis=0)
            )

        return self._profile

    def count(self, e: int) -> int:
        self._ground.check_element(e)
        bit = 1 << (e - 1)
        return sum(1 for mask in self._masks if mask & bit)

    # -------------------------------------------------
    # Quotients and filters

    def delete_element(self, i: int) -> 'SetFamily':
        """G = {A \\ {i} : A in F}, duplicates merged
        """

        self._ground.check_element(i)
        keep = ~(1 << (i - 1))

        return SetFamily.from_sorted(
            self._ground,
            tuple(sorted({mask & keep for mask in self._masks}))
        )

    def _filter(
        self,
        j: int,
        containing: bool
    ) -> Optional['SetFamily']:
        self._ground.check_element(j)
        bit = 1 << (j - 1)

        masks = tuple(
            mask for mask in self._masks
            if bool(mask & bit) is containing
        )

        if not masks:
            return None

        # Both halves of a union-closed family are union-closed
        return SetFamily.from_sorted(
            self._ground,
            masks,
            True if self._closed else None
        )

    def filter_containing(self, j: int) -> Optional['SetFamily']:
        """F_j, or `None` if no member contains j
        """

        return self._filter(j, True)

    def filter_not_containing(self, j: int) -> Optional['SetFamily']:
        """F_{/j}, or `None` if every member contains j
        """

        return self._filter(j, False)

    # -------------------------------------------------
    # Relabelings

    def relabel(self, perm: Dict[int, int]) -> 'SetFamily':
        """Applies the element map `perm` (a permutation of M_n)
        """

        return SetFamily(
            self._ground,
            [
                mask_of(perm[e] for e in ElementSet(mask, self.n))
                for mask in self._masks
            ],
            self._closed
        )

    def canonical_form(self) -> 'SetFamily':
        """The lexicographically smallest relabeling, see `canonical_masks`
        """

        return SetFamily.from_sorted(
            self._ground,
            canonical_masks(self._masks, self.n),
            self._closed
        )


def union_closure_masks(masks: Iterable[Mask]) -> set:
    """Closes a collection of masks under pairwise unions.

    Adding a generator g to a union-closed R only creates {g} and g | r for
    r in R, so one pass per generator reaches the fixpoint.
    """

    closure = set()

    for g in masks:
        if g in closure:
            continue

        closure |= {g | r for r in closure}
        closure.add(g)

    return closure


def family_from_generators(
    n: int,
    generators: Iterable[Mask]
) -> SetFamily:
    ground = GroundSet(n)
    closure = union_closure_masks(
        ground.check_mask(g) for g in generators
    )

    if not closure:
        raise EmptyFamilyException()

    return SetFamily.from_sorted(ground, tuple(sorted(closure)), True)
