from typing import (
    Tuple,
    Union
)

from ucf.common.constants import (
    Verdict,
    CheckName
)
from ucf.common.exceptions import (
    MembershipException,
    SetSizeException,
    TheoremViolationException
)
from ucf.common.ratio import (
    Ratio,
    nagel_bound
)
from ucf.common.utils import (
    popcount,
    element_list,
    format_mask,
    mask_of
)
from ucf.family import (
    SetFamily,
    ElementSet
)

from .lemma import lemma1_bound
from .types import (
    BoundReport,
    Prop34Reduction,
    ReductionLevel,
    Witness
)


SetLike = Union[ElementSet, int]

HALF = Ratio(1, 2)


def _member(f: SetFamily, a: SetLike) -> int:
    mask = a.bits if isinstance(a, ElementSet) else a
    f.ground.check_mask(mask)

    if mask not in f:
        raise MembershipException(mask)

    return mask


def nagel_lemma_check(f: SetFamily, a: SetLike) -> BoundReport:
    """Every x in the member A has freq(x) * (2^(|A|-1) + 1) >= |F|
    """

    f.require_union_closed()
    mask = _member(f, a)
    size = popcount(mask)

    if size < 1:
        raise SetSizeException(mask, 'at least one element')

    profile = f.frequency_profile()
    factor = (1 << (size - 1)) + 1
    failing = [
        x for x in element_list(mask)
        if profile.count(x) * factor < profile.total
    ]

    return BoundReport(
        context=CheckName.LEMMA33,
        verdict=Verdict.FAILS if failing else Verdict.HOLDS,
        bound=nagel_bound(size),
        witnesses=tuple(
            Witness(x, profile.ratio(x)) for x in element_list(mask)
        ),
        detail=dict(member=element_list(mask), failing=failing)
    )


def two_set_majority(f: SetFamily, a: SetLike) -> int:
    """An abundant element of the two-element member A, the more frequent
    one if both are, the smaller one on a tie.
    """

    f.require_union_closed()
    mask = _member(f, a)

    if popcount(mask) != 2:
        raise SetSizeException(mask, 'exactly two elements')

    profile = f.frequency_profile()
    candidates = [x for x in element_list(mask) if profile.is_abundant(x)]

    if not candidates:
        raise TheoremViolationException(
            'two-element majority',
            f'no element of {format_mask(mask)} is abundant'
        )

    return min(candidates, key=lambda x: (-profile.count(x), x))


def prop34_witness(f: SetFamily, a: SetLike) -> Tuple[int, Ratio]:
    """The smallest y in A with freq(y) * (2^(|A|-2) + 1) >= |F|
    """

    f.require_union_closed()
    mask = _member(f, a)
    size = popcount(mask)

    if size < 2:
        raise SetSizeException(mask, 'at least two elements')

    profile = f.frequency_profile()
    factor = (1 << (size - 2)) + 1

    for y in element_list(mask):
        if profile.count(y) * factor >= profile.total:
            return y, profile.ratio(y)

    raise TheoremViolationException(
        'member frequency bound',
        f'no element of {format_mask(mask)} reaches 1/{factor}'
    )


def prop34_reduction(f: SetFamily, a: SetLike) -> Prop34Reduction:
    """Finds a witness for `prop34_witness` by the reduction argument.

    The |A| - 2 smallest elements of A are deleted one at a time, the
    remaining pair is still a member of the last quotient and has an
    abundant element y. The guarantee for y starts at 1/2 there and is
    lifted back through every quotient with `lemma1_bound`.
    """

    f.require_union_closed()
    mask = _member(f, a)
    size = popcount(mask)

    if size < 2:
        raise SetSizeException(mask, 'at least two elements')

    elements = element_list(mask)
    deleted = elements[:-2]

    families = [f]
    for x in deleted:
        families.append(families[-1].delete_element(x))

    y = two_set_majority(families[-1], mask_of(elements[-2:]))

    guaranteed = HALF
    levels = []

    for depth in range(len(families) - 1, -1, -1):
        if depth < len(families) - 1:
            guaranteed = lemma1_bound(guaranteed)

        family = families[depth]
        achieved = Ratio(family.count(y), len(family))

        if achieved < guaranteed:
            raise TheoremViolationException(
                'deletion lemma',
                f'{y} reaches {achieved!r} < {guaranteed!r} '
                f'after deleting {deleted[:depth]}'
            )

        levels.append(ReductionLevel(
            deleted=deleted[depth] if depth < len(deleted) else None,
            size=len(family),
            achieved=achieved,
            guaranteed=guaranteed
        ))

    levels.reverse()
    bound = nagel_bound(size - 1)

    if guaranteed != bound:
        raise TheoremViolationException(
            'bound recurrence',
            f'lifted guarantee {guaranteed!r} differs from {bound!r}'
        )

    return Prop34Reduction(element=y, bound=bound, levels=levels)


def small_set_frankl(f: SetFamily) -> BoundReport:
    """Frankl's conjecture for families with a member of size one or two.

    A singleton {x} makes x abundant, a pair has an abundant element.
    """

    f.require_union_closed()

    t = f.t_value()

    if t is None or t > 2:
        return BoundReport(
            context=CheckName.SMALL_SET,
            verdict=Verdict.NOT_APPLICABLE,
            bound=HALF,
            detail=dict(t_value=t)
        )

    smallest = next(m for m in f.masks if popcount(m) == t)
    profile = f.frequency_profile()
    abundant = [x for x in element_list(smallest) if profile.is_abundant(x)]

    return BoundReport(
        context=CheckName.SMALL_SET,
        verdict=Verdict.HOLDS if abundant else Verdict.FAILS,
        bound=HALF,
        witnesses=tuple(Witness(x, profile.ratio(x)) for x in abundant),
        detail=dict(t_value=t, member=element_list(smallest))
    )
