from typing import List

from ucf.common.constants import (
    Verdict,
    CheckName
)
from ucf.common.exceptions import (
    InvalidArgumentException,
    InvalidRatioException
)
from ucf.common.ratio import (
    Ratio,
    RatioLike
)
from ucf.family import SetFamily

from .types import (
    BoundReport,
    ProofQuantities,
    Witness
)


def mediant_check(
    a: int,
    b: int,
    c: int,
    d: int,
    k: RatioLike
) -> bool:
    """Evaluates (b/a >= k and d/c >= k) => (b+d)/(a+c) >= k exactly.

    The implication is a theorem, so a `False` return is a defect.
    """

    for name, value in (('a', a), ('c', c)):
        if value <= 0:
            raise InvalidArgumentException(
                name, f'denominator must be positive, but got {value}')

    for name, value in (('b', b), ('d', d)):
        if value < 0:
            raise InvalidArgumentException(
                name, f'must not be negative, but got {value}')

    k = Ratio.of(k)
    p, q = k.num, k.den

    premise = b * q >= p * a and d * q >= p * c
    return not premise or (b + d) * q >= p * (a + c)


def lemma1_bound(c: RatioLike) -> Ratio:
    """1 / (1 + 2(1 - c) / c), which is c / (2 - c).

    Strictly increasing on (0, 1], below c except at the fixed point c = 1,
    and maps 1 / (2^(k-1) + 1) to 1 / (2^k + 1).
    """

    c = Ratio.of(c)

    if not 0 < c <= 1:
        raise InvalidRatioException(c, 'c must be in (0, 1]')

    return Ratio(c / (2 - c))


def iterate_lemma1_bound(c: RatioLike, times: int) -> List[Ratio]:
    """[lemma1_bound(c), lemma1_bound(lemma1_bound(c)), ...], `times` values
    """

    values = []
    current = Ratio.of(c)

    for _ in range(times):
        current = lemma1_bound(current)
        values.append(current)

    return values


def _check_pair(f: SetFamily, i: int, j: int) -> None:
    f.ground.check_element(i)
    f.ground.check_element(j)

    if i == j:
        raise InvalidArgumentException('j', f'must differ from i = {i}')


def proof_quantities(
    f: SetFamily,
    i: int,
    j: int
) -> ProofQuantities:
    """Computes |G_j|, |G_/j|, x and y literally from their definitions,
    as intersections of bitmask collections.
    """

    _check_pair(f, i, j)
    f.require_union_closed()

    bi = 1 << (i - 1)
    bj = 1 << (j - 1)
    keep = ~bi
    members = f.masks

    g = {mask & keep for mask in members}
    g_j = sum(1 for mask in g if mask & bj)

    # {A in F : i not in A, j in A} & {B \ {i} : B in F, i, j in B}
    x = len(
        {a for a in members if not a & bi and a & bj}
        & {b & keep for b in members if b & bi and b & bj}
    )

    # {A in F : i, j not in A} & {B \ {i} : B in F, i in B, j not in B}
    y = len(
        {a for a in members if not a & bi and not a & bj}
        & {b & keep for b in members if b & bi and not b & bj}
    )

    return ProofQuantities(
        i=i,
        j=j,
        g_j=g_j,
        g_not_j=len(g) - g_j,
        x=x,
        y=y,
        f_j=sum(1 for mask in members if mask & bj),
        f_total=len(members)
    )


def lemma1_verify(
    f: SetFamily,
    i: int,
    j: int
) -> BoundReport:
    """Checks the deletion lemma at its sharpest constant c* = |G_j| / |G|.

    Since the bound is increasing in c, this covers every c <= c*. The
    argument never assumes x > 0.
    """

    pq = proof_quantities(f, i, j)
    g = pq.g_total
    detail = dict(quantities=pq.to_json())

    if pq.g_j == 0:
        return BoundReport(
            context=CheckName.LEMMA1,
            verdict=Verdict.NOT_APPLICABLE,
            bound=Ratio(0),
            detail=detail
        )

    # |F_j| / |F| >= c* / (2 - c*) = |G_j| / (2|G| - |G_j|)
    bound = Ratio(pq.g_j, 2 * g - pq.g_j)
    holds = pq.f_j * (2 * g - pq.g_j) >= pq.g_j * pq.f_total

    detail['c_star'] = pq.c_star.to_json()

    return BoundReport(
        context=CheckName.LEMMA1,
        verdict=Verdict.HOLDS if holds else Verdict.FAILS,
        bound=bound,
        witnesses=(Witness(j, Ratio(pq.f_j, pq.f_total)),),
        detail=detail
    )
