import pytest

from ucf import (
    Verdict,
    CheckName,
    ConjectureStatus,
    UnknownCheckException,
    SetFamily,
    Ratio,
    BoundReport,
    frankl_check
)
from ucf.checks import (
    CHECKS,
    CHECK_NAMES,
    Check,
    Outcome,
    resolve_checks
)
from ucf.common.exceptions import TheoremViolationException

from .common import fam


def test_registry():
    assert len(CHECKS) == len(CheckName)
    assert sorted(CHECK_NAMES) == sorted(str(name) for name in CheckName)


def test_resolve_checks():
    checks = resolve_checks(['lemma1', CheckName.FRANKL, 'lemma1'])

    assert [check.NAME for check in checks] \
        == [CheckName.LEMMA1, CheckName.FRANKL]

    with pytest.raises(UnknownCheckException, match='"unknown"'):
        resolve_checks(['frankl', 'unknown'])

    with pytest.raises(UnknownCheckException):
        resolve_checks([])


def test_status():
    s_frankl, frankl, lemma1 = resolve_checks(['s_frankl', 'frankl', 'lemma1'])

    assert s_frankl.status is ConjectureStatus.OPEN
    assert not s_frankl.theorem_backed
    assert frankl.theorem_backed
    assert lemma1.status is ConjectureStatus.THEOREM


def run(name: str, family: SetFamily):
    check, = resolve_checks([name])
    return check.run(family)


def verdicts(outcomes):
    return [outcome.verdict for outcome in outcomes]


def test_single_report_checks():
    f = fam(2, [1], [2], [1, 2])

    for name in ('frankl', 'nagel', 'chain', 'small_set'):
        assert verdicts(run(name, f)) == [Verdict.HOLDS]

    assert verdicts(run('s_frankl', f)) == [Verdict.NOT_APPLICABLE]
    assert verdicts(run('question1_t2', f)) == [Verdict.NOT_APPLICABLE]
    assert verdicts(run('chain', fam(2, []))) == [Verdict.NOT_APPLICABLE]


def test_pair_checks():
    f = fam(3, [1], [2], [1, 2])

    outcomes = run('lemma1', f)
    assert len(outcomes) == 6
    assert outcomes[0].instance == {'i': 1, 'j': 2}

    outcomes = run('eq21', f)
    assert verdicts(outcomes) == [Verdict.HOLDS] * 6


def test_member_checks():
    f = fam(3, [], [1, 2], [1, 2, 3])

    assert [o.instance for o in run('lemma33', f)] == [[1, 2], [1, 2, 3]]
    assert [o.instance for o in run('prop34', f)] == [[1, 2], [1, 2, 3]]
    assert [o.instance for o in run('two_set', f)] == [[1, 2]]
    assert all(
        o.verdict is Verdict.HOLDS
        for name in ('lemma33', 'prop34', 'two_set')
        for o in run(name, f)
    )


def test_from_report():
    holds = frankl_check(fam(2, [1, 2]))
    assert Check.from_report(holds).detail is None

    fails = BoundReport(
        context=CheckName.FRANKL,
        verdict=Verdict.FAILS,
        bound=Ratio(1, 2)
    )
    outcome = Check.from_report(fails, [1])

    assert outcome.verdict is Verdict.FAILS
    assert outcome.instance == [1]
    assert outcome.detail['verdict'] == 'fails'
    # outside the verified range without a `proven` flag
    assert not outcome.theorem_backed

    proven = BoundReport(
        context=CheckName.FRANKL,
        verdict=Verdict.FAILS,
        bound=Ratio(1, 2),
        detail=dict(proven=True)
    )
    assert Check.from_report(proven).theorem_backed


class BrokenCheck(Check):
    NAME = CheckName.LEMMA33

    def _run(self, family):
        yield Outcome(Verdict.HOLDS, 'first', None)
        raise TheoremViolationException('statement', 'detail')


def test_theorem_violation_becomes_failure():
    outcomes = BrokenCheck().run(fam(1, [1]))

    assert verdicts(outcomes) == [Verdict.HOLDS, Verdict.FAILS]
    assert 'statement failed' in outcomes[1].detail['error']


class FailingOpenCheck(Check):
    NAME = CheckName.S_FRANKL

    def _run(self, family):
        yield Outcome(Verdict.FAILS, None, None)


def test_open_check_failures_are_findings():
    outcome, = FailingOpenCheck().run(fam(1, [1]))

    assert outcome.verdict is Verdict.FAILS
    assert not outcome.theorem_backed


def test_chain_outcome_is_backed_in_the_verified_range():
    outcome, = run('chain', SetFamily.power_set(3))

    assert outcome.verdict is Verdict.HOLDS
    assert outcome.theorem_backed
