from typing import List

from ucf.common.constants import (
    Verdict,
    CheckName,
    FRANKL_VERIFIED_N,
    FRANKL_VERIFIED_M,
    NAGEL_PROVEN_RANK
)
from ucf.common.exceptions import (
    InvalidArgumentException,
    TrivialFamilyException,
    TheoremViolationException
)
from ucf.common.ratio import (
    Ratio,
    nagel_bound
)
from ucf.common.utils import popcount
from ucf.family import SetFamily

from .lemma import lemma1_bound
from .types import (
    BoundReport,
    ChainStep,
    Question1Profile,
    Witness
)


HALF = Ratio(1, 2)
THIRD = Ratio(1, 3)


def frankl_verified(f: SetFamily) -> bool:
    """Whether f lies in the range where Frankl's conjecture is verified,
    by the size of its union or by its number of members
    """

    return (
        popcount(f.union_mask) <= FRANKL_VERIFIED_N
        or len(f) <= FRANKL_VERIFIED_M
    )


def frankl_check(f: SetFamily) -> BoundReport:
    """Lists every abundant element, i.e. 2 * freq(e) >= |F|
    """

    f.require_union_closed()

    if f.is_trivial():
        return BoundReport(
            context=CheckName.FRANKL,
            verdict=Verdict.NOT_APPLICABLE,
            bound=HALF
        )

    profile = f.frequency_profile()
    witnesses = tuple(
        Witness(e, profile.ratio(e))
        for e in profile.abundant()
    )

    return BoundReport(
        context=CheckName.FRANKL,
        verdict=Verdict.HOLDS if witnesses else Verdict.FAILS,
        bound=HALF,
        witnesses=witnesses,
        detail=dict(
            total=profile.total,
            proven=frankl_verified(f)
        )
    )


def nagel_check(f: SetFamily) -> BoundReport:
    """freq(k-th most frequent) * (2^(k-1) + 1) >= |F| for every rank k
    up to the size of the union of f.
    """

    f.require_union_closed()

    if f.is_trivial():
        return BoundReport(
            context=CheckName.NAGEL,
            verdict=Verdict.NOT_APPLICABLE,
            bound=HALF
        )

    profile = f.frequency_profile()
    ranks = popcount(f.union_mask)

    witnesses = []
    failing = []

    for k in range(1, ranks + 1):
        e = profile.ranked(k)
        witnesses.append(Witness(e, profile.ratio(e), nagel_bound(k)))

        if profile.count(e) * ((1 << (k - 1)) + 1) < profile.total:
            failing.append(k)

    return BoundReport(
        context=CheckName.NAGEL,
        verdict=Verdict.FAILS if failing else Verdict.HOLDS,
        # the weakest of the per-rank bounds
        bound=nagel_bound(ranks),
        witnesses=tuple(witnesses),
        detail=dict(
            ranks=ranks,
            first_failure=failing[0] if failing else None,
            failing_ranks=failing,
            proven=(
                frankl_verified(f)
                or any(k >= NAGEL_PROVEN_RANK for k in failing)
            )
        )
    )


def nagel_chain(f: SetFamily) -> List[ChainStep]:
    """Repeatedly deletes the most frequent element of the current quotient.

    Step k picks e_k in f_{k-1} (ties go to the smaller element) and records
    its frequency in the ORIGINAL family against 1 / (2^(k-1) + 1). The
    bound sequence is produced by iterating `lemma1_bound` from 1/2 and is
    compared with the closed form at every step.
    """

    f.require_union_closed()

    if f.is_trivial():
        raise TrivialFamilyException()

    original = f.frequency_profile()
    current = f
    bound = HALF
    k = 1
    steps = []

    while current.union_mask:
        profile = current.frequency_profile()
        e = profile.ranked(1)

        steps.append(ChainStep(
            k=k,
            element=e,
            bound=bound,
            achieved=original.ratio(e),
            quotient_ratio=profile.ratio(e)
        ))

        bound = lemma1_bound(bound)
        k += 1

        if bound != nagel_bound(k):
            raise TheoremViolationException(
                'bound recurrence',
                f'step {k} gives {bound!r} instead of {nagel_bound(k)!r}'
            )

        current = current.delete_element(e)

    return steps


def s_frankl_check(f: SetFamily) -> BoundReport:
    """At least two abundant elements when T(F) >= 2.

    This is an open conjecture, the verdict is reported and never asserted.
    """

    f.require_union_closed()

    t = f.t_value()

    if t is None or t < 2:
        return BoundReport(
            context=CheckName.S_FRANKL,
            verdict=Verdict.NOT_APPLICABLE,
            bound=HALF,
            detail=dict(t_value=t)
        )

    profile = f.frequency_profile()
    abundant = profile.abundant()

    return BoundReport(
        context=CheckName.S_FRANKL,
        verdict=Verdict.HOLDS if len(abundant) >= 2 else Verdict.FAILS,
        bound=HALF,
        witnesses=tuple(Witness(e, profile.ratio(e)) for e in abundant),
        detail=dict(t_value=t, abundant=len(abundant))
    )


def question1_profile(f: SetFamily) -> Question1Profile:
    """The two largest normalized frequencies over distinct elements
    """

    f.require_union_closed()

    if popcount(f.union_mask) < 2:
        raise InvalidArgumentException(
            'f', 'needs at least two elements in the union of its members')

    profile = f.frequency_profile()
    first, second = profile.ranked(1), profile.ranked(2)

    return Question1Profile(
        c1=profile.ratio(first),
        c2=profile.ratio(second),
        first=first,
        second=second,
        t_value=f.t_value()
    )


def t2_profile_check(f: SetFamily) -> BoundReport:
    """If T(F) = 2 then c1 >= 1/2 and c2 >= 1/3.

    A two-element member has an abundant element y; deleting y leaves a
    singleton, which is abundant in the quotient, and one application of
    `lemma1_bound(1/2)` lifts it to 1/3 in F.
    """

    f.require_union_closed()

    t = f.t_value()

    if t != 2:
        return BoundReport(
            context=CheckName.QUESTION1_T2,
            verdict=Verdict.NOT_APPLICABLE,
            bound=THIRD,
            detail=dict(t_value=t)
        )

    q = question1_profile(f)
    holds = q.c1 >= HALF and q.c2 >= THIRD

    return BoundReport(
        context=CheckName.QUESTION1_T2,
        verdict=Verdict.HOLDS if holds else Verdict.FAILS,
        bound=THIRD,
        witnesses=(
            Witness(q.first, q.c1, HALF),
            Witness(q.second, q.c2, THIRD)
        ),
        detail=dict(t_value=t)
    )
