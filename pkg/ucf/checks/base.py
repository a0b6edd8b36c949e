from typing import (
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional
)

from ucf.common.constants import (
    Verdict,
    CheckName,
    ConjectureStatus,
    CONJECTURE_STATUS
)
from ucf.common.exceptions import TheoremViolationException
from ucf.common.types import Instance
from ucf.bounds import BoundReport
from ucf.family import SetFamily


class Outcome(NamedTuple):
    verdict: Verdict
    instance: Optional[Instance]
    detail: Optional[dict]

    # whether a FAILS verdict contradicts a proven result
    theorem_backed: bool = True


class Check:
    """One named check of a sweep.

    Subclasses set `NAME` and implement `_run()`, yielding one `Outcome`
    per instance, e.g. per ordered pair (i, j) or per member of the family.
    """

    NAME: CheckName

    @property
    def status(self) -> ConjectureStatus:
        return CONJECTURE_STATUS[self.NAME]

    @property
    def theorem_backed(self) -> bool:
        """Whether a failure can be a defect rather than a finding. For
        statements proven only on small families each `Outcome` decides.
        """

        return self.status is not ConjectureStatus.OPEN

    def run(self, family: SetFamily) -> List[Outcome]:
        outcomes = []

        try:
            for outcome in self._run(family):
                outcomes.append(outcome)
        except TheoremViolationException as e:
            outcomes.append(Outcome(Verdict.FAILS, None, dict(error=str(e))))

        if not self.theorem_backed:
            return [
                outcome._replace(theorem_backed=False)
                for outcome in outcomes
            ]

        return outcomes

    def _run(self, family: SetFamily) -> Iterable[Outcome]:
        ...  # pragma: no cover

    # -----------------------------------------------

    @staticmethod
    def from_report(
        report: BoundReport,
        instance: Optional[Instance] = None
    ) -> Outcome:
        return Outcome(
            report.verdict,
            instance,
            report.to_json() if report.fails else None,
            report.theorem_backed
        )

    @staticmethod
    def ordered_pairs(family: SetFamily) -> Iterator[tuple]:
        for i in family.ground.elements:
            for j in family.ground.elements:
                if i != j:
                    yield i, j

    def __repr__(self) -> str:
        return f'<{type(self).__name__} {self.NAME}>'
