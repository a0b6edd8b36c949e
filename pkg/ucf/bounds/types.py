from dataclasses import (
    dataclass,
    field
)
from typing import (
    List,
    Optional,
    Tuple
)

from ucf.common.constants import (
    Verdict,
    CheckName,
    ConjectureStatus,
    CONJECTURE_STATUS
)
from ucf.common.ratio import Ratio
from ucf.common.types import JSONObject


@dataclass(frozen=True)
class Witness:
    element: int
    ratio: Ratio

    # Set when the witness is checked against its own bound, e.g. the k-th
    # ranked element in Nagel's inequality
    bound: Optional[Ratio] = None

    def to_json(self) -> JSONObject:
        obj = dict(
            element=self.element,
            num=self.ratio.num,
            den=self.ratio.den
        )

        if self.bound is not None:
            obj['bound'] = self.bound.to_json()

        return obj


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one lemma or conjecture check on one instance.

    A HOLDS verdict guarantees that every witness reaches `bound`.
    """

    context: CheckName
    verdict: Verdict
    bound: Ratio
    witnesses: Tuple[Witness, ...] = ()
    detail: JSONObject = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict is Verdict.FAILS

    @property
    def theorem_backed(self) -> bool:
        """Whether a FAILS verdict on this instance contradicts a proven
        result. Statements proven only for small families carry the
        decision in `detail['proven']`.
        """

        status = CONJECTURE_STATUS[self.context]

        if status is ConjectureStatus.PROVEN_SMALL:
            return bool(self.detail.get('proven'))

        return status is ConjectureStatus.THEOREM

    def to_json(self) -> JSONObject:
        return dict(
            context=str(self.context),
            verdict=str(self.verdict),
            bound=self.bound.to_json(),
            witnesses=[w.to_json() for w in self.witnesses],
            bound_decimal=round(float(self.bound), 6),
            detail=self.detail
        )


@dataclass(frozen=True)
class ProofQuantities:
    """The counts in the proof of the deletion lemma, for fixed i != j.

    `g_j`, `g_not_j` partition G = {A \\ {i} : A in F} by j, `x` and `y` are
    the members of G that two different members of F collapse onto.
    """

    i: int
    j: int
    g_j: int
    g_not_j: int
    x: int
    y: int
    f_j: int
    f_total: int

    @property
    def g_total(self) -> int:
        return self.g_j + self.g_not_j

    @property
    def c_star(self) -> Ratio:
        return Ratio(self.g_j, self.g_total)

    def ranges_hold(self) -> bool:
        return 0 <= self.x <= self.g_j and 0 <= self.y <= self.g_not_j

    def identities_hold(self) -> bool:
        # |F_j| / |F| = (|G_j| + x) / (|G_j| + |G_/j| + x + y), as integers
        return (
            self.f_j == self.g_j + self.x
            and self.f_total == self.g_j + self.g_not_j + self.x + self.y
        )

    def reduced_bound_holds(self) -> bool:
        """g_j / (g_j + g_not_j + y) >= c* / (2 - c*), cross-multiplied.

        Vacuous when g_j = 0.
        """

        g = self.g_total
        return self.g_j * (2 * g - self.g_j) >= \
            self.g_j * (self.g_j + self.g_not_j + self.y)

    def to_json(self) -> JSONObject:
        return dict(
            i=self.i,
            j=self.j,
            g_j=self.g_j,
            g_not_j=self.g_not_j,
            x=self.x,
            y=self.y,
            f_j=self.f_j,
            f_total=self.f_total
        )


@dataclass(frozen=True)
class ChainStep:
    k: int
    element: int

    # 1 / (2^(k-1) + 1)
    bound: Ratio

    # frequency of `element` in the original family
    achieved: Ratio

    # frequency of `element` in the quotient it was picked from
    quotient_ratio: Ratio

    @property
    def holds(self) -> bool:
        return self.achieved >= self.bound

    def to_json(self) -> JSONObject:
        return dict(
            k=self.k,
            element=self.element,
            bound=self.bound.to_json(),
            achieved=self.achieved.to_json(),
            quotient=self.quotient_ratio.to_json()
        )


@dataclass(frozen=True)
class Question1Profile:
    c1: Ratio
    c2: Ratio
    first: int
    second: int
    t_value: Optional[int]

    def to_json(self) -> JSONObject:
        return dict(
            c1=self.c1.to_json(),
            c2=self.c2.to_json(),
            first=self.first,
            second=self.second,
            t_value=self.t_value
        )


@dataclass(frozen=True)
class ReductionLevel:
    # element deleted to reach the next level, None at the last level
    deleted: Optional[int]
    size: int
    achieved: Ratio
    guaranteed: Ratio


@dataclass(frozen=True)
class Prop34Reduction:
    element: int
    bound: Ratio

    # levels[0] is the original family, levels[-1] the one holding the pair
    levels: List[ReductionLevel]

    @property
    def achieved(self) -> Ratio:
        return self.levels[0].achieved
