from typing import Iterable

from ucf.bounds import (
    frankl_verified,
    frankl_check,
    nagel_check,
    nagel_chain,
    s_frankl_check,
    lemma1_verify,
    proof_quantities,
    nagel_lemma_check,
    prop34_witness,
    prop34_reduction,
    two_set_majority,
    small_set_frankl,
    t2_profile_check
)
from ucf.common.constants import (
    Verdict,
    CheckName
)
from ucf.common.exceptions import TheoremViolationException
from ucf.common.utils import (
    popcount,
    element_list
)
from ucf.family import SetFamily

from .base import (
    Check,
    Outcome
)


def _holds(ok: bool) -> Verdict:
    return Verdict.HOLDS if ok else Verdict.FAILS


class FranklCheck(Check):
    NAME = CheckName.FRANKL

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        yield self.from_report(frankl_check(family))


class NagelCheck(Check):
    NAME = CheckName.NAGEL

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        yield self.from_report(nagel_check(family))


class ChainCheck(Check):
    NAME = CheckName.CHAIN

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        if family.is_trivial():
            yield Outcome(Verdict.NOT_APPLICABLE, None, None)
            return

        steps = nagel_chain(family)
        failing = [step.to_json() for step in steps if not step.holds]

        # every step leans on Frankl's conjecture for a quotient
        yield Outcome(
            _holds(not failing),
            None,
            dict(failing_steps=failing) if failing else None,
            frankl_verified(family)
        )


class SFranklCheck(Check):
    NAME = CheckName.S_FRANKL

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        yield self.from_report(s_frankl_check(family))


class Lemma1Check(Check):
    NAME = CheckName.LEMMA1

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        for i, j in self.ordered_pairs(family):
            yield self.from_report(lemma1_verify(family, i, j), dict(i=i, j=j))


class Eq21Check(Check):
    """The integer identities behind |F_j| / |F| = (g_j + x) / (g + x + y),
    the ranges of x and y, and the reduced bound without x.
    """

    NAME = CheckName.EQ21

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        for i, j in self.ordered_pairs(family):
            pq = proof_quantities(family, i, j)
            ok = (
                pq.ranges_hold()
                and pq.identities_hold()
                and pq.reduced_bound_holds()
            )

            yield Outcome(
                _holds(ok),
                dict(i=i, j=j),
                None if ok else pq.to_json()
            )


class Lemma33Check(Check):
    NAME = CheckName.LEMMA33

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        for mask in family.masks:
            if mask:
                yield self.from_report(
                    nagel_lemma_check(family, mask),
                    element_list(mask)
                )


class SmallSetCheck(Check):
    NAME = CheckName.SMALL_SET

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        yield self.from_report(small_set_frankl(family))


class Question1T2Check(Check):
    NAME = CheckName.QUESTION1_T2

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        yield self.from_report(t2_profile_check(family))


class Prop34Check(Check):
    """Both the direct witness search and the reduction argument must find
    an element of A reaching 1 / (2^(|A|-2) + 1).
    """

    NAME = CheckName.PROP34

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        for mask in family.masks:
            if popcount(mask) < 2:
                continue

            instance = element_list(mask)

            try:
                prop34_witness(family, mask)
                prop34_reduction(family, mask)
            except TheoremViolationException as e:
                yield Outcome(Verdict.FAILS, instance, dict(error=str(e)))
                continue

            yield Outcome(Verdict.HOLDS, instance, None)


class TwoSetCheck(Check):
    NAME = CheckName.TWO_SET

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        for mask in family.masks:
            if popcount(mask) != 2:
                continue

            instance = element_list(mask)

            try:
                two_set_majority(family, mask)
            except TheoremViolationException as e:
                yield Outcome(Verdict.FAILS, instance, dict(error=str(e)))
                continue

            yield Outcome(Verdict.HOLDS, instance, None)
