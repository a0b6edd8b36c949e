import pytest

from ucf import (
    Ratio,
    Verdict,
    CheckName,
    BoundReport,
    SetFamily,
    TrivialFamilyException,
    InvalidArgumentException,
    NotUnionClosedException,
    frankl_check,
    nagel_check,
    nagel_chain,
    s_frankl_check,
    question1_profile,
    nagel_bound
)
from ucf.bounds import (
    frankl_verified,
    t2_profile_check
)
from ucf.enumeration import (
    EnumConfig,
    enumerate_dense
)

from .common import fam


HALF = Ratio(1, 2)


def test_frankl_power_set():
    for k in range(1, 5):
        report = frankl_check(SetFamily.power_set(k))

        assert report.holds
        assert [w.element for w in report.witnesses] == list(range(1, k + 1))
        assert all(w.ratio == HALF for w in report.witnesses)


def test_frankl():
    report = frankl_check(fam(2, [1], [1, 2]))

    assert report.holds
    assert report.witnesses[0].element == 1
    assert report.witnesses[0].ratio == 1
    assert report.detail['proven'] is True

    assert frankl_check(fam(2, [])).verdict is Verdict.NOT_APPLICABLE

    with pytest.raises(NotUnionClosedException):
        frankl_check(fam(2, [1], [2]))


def test_frankl_exhaustive_n4():
    for f in enumerate_dense(EnumConfig(4, exclude_trivial=True)):
        assert frankl_check(f).holds


def test_nagel():
    report = nagel_check(fam(2, [1], [1, 2]))

    assert report.holds
    assert [w.element for w in report.witnesses] == [1, 2]
    assert [w.bound for w in report.witnesses] == [HALF, Ratio(1, 3)]
    assert report.detail == {
        'ranks': 2,
        'first_failure': None,
        'failing_ranks': [],
        'proven': True
    }
    assert report.bound == Ratio(1, 3)


def test_nagel_ranks_follow_the_union():
    report = nagel_check(fam(4, [1], [1, 2]))

    assert report.detail['ranks'] == 2
    assert len(report.witnesses) == 2


def test_nagel_exhaustive_n4():
    for f in enumerate_dense(EnumConfig(4, exclude_trivial=True)):
        assert nagel_check(f).holds


def test_nagel_first_rank_is_frankl():
    for f in enumerate_dense(EnumConfig(4)):
        frankl = frankl_check(f)
        nagel = nagel_check(f)

        if frankl.verdict is Verdict.NOT_APPLICABLE:
            assert nagel.verdict is Verdict.NOT_APPLICABLE
            continue

        first = nagel.witnesses[0]
        assert (first.ratio >= first.bound) == frankl.holds
        assert first.element == f.frequency_profile().ranked(1)
        assert first.element in [w.element for w in frankl.witnesses]


def test_frankl_verified():
    assert frankl_verified(SetFamily.power_set(6))

    # 64 members spanning 13 elements
    big = SetFamily.of(13, [
        [e for e in range(1, 7) if a >> (e - 1) & 1] + list(range(7, 14))
        for a in range(64)
    ])

    assert not frankl_verified(big)

    report = frankl_check(big)
    assert report.holds
    assert report.detail['proven'] is False
    assert not report.theorem_backed

    assert not nagel_check(big).detail['proven']


def test_theorem_backed_per_instance():
    def report(context, **detail):
        return BoundReport(context, Verdict.FAILS, HALF, detail=detail)

    assert report(CheckName.FRANKL, proven=True).theorem_backed
    assert not report(CheckName.FRANKL, proven=False).theorem_backed
    assert not report(CheckName.FRANKL).theorem_backed
    assert report(CheckName.NAGEL, proven=True).theorem_backed
    assert not report(CheckName.S_FRANKL, proven=True).theorem_backed
    assert report(CheckName.LEMMA1).theorem_backed


def test_nagel_chain_power_set():
    steps = nagel_chain(SetFamily.power_set(3))

    assert [s.element for s in steps] == [1, 2, 3]
    assert [s.bound for s in steps] == [nagel_bound(k) for k in (1, 2, 3)]
    assert [s.achieved for s in steps] == [HALF] * 3
    assert [s.quotient_ratio for s in steps] == [HALF] * 3
    assert all(s.holds for s in steps)


def test_nagel_chain_single_element():
    steps = nagel_chain(fam(3, [], [2]))

    assert len(steps) == 1
    assert steps[0].element == 2
    assert steps[0].achieved == HALF


def test_nagel_chain_trivial():
    with pytest.raises(TrivialFamilyException):
        nagel_chain(fam(3, []))


def test_nagel_chain_exhaustive_n4():
    cfg = EnumConfig(4, spanning=True)

    for f in enumerate_dense(cfg):
        steps = nagel_chain(f)
        assert len(steps) == 4
        assert all(step.holds for step in steps)


def test_s_frankl():
    report = s_frankl_check(fam(2, [1, 2]))

    assert report.holds
    assert len(report.witnesses) == 2

    assert s_frankl_check(fam(2, [1], [1, 2])).verdict \
        is Verdict.NOT_APPLICABLE
    assert s_frankl_check(fam(2, [])).verdict is Verdict.NOT_APPLICABLE


def test_s_frankl_matches_second_frequency():
    # for T >= 2, two abundant elements iff c2 >= 1/2
    for f in enumerate_dense(EnumConfig(4, spanning=True)):
        if (f.t_value() or 0) < 2:
            continue

        report = s_frankl_check(f)
        assert report.verdict is not Verdict.NOT_APPLICABLE
        assert report.holds == (question1_profile(f).c2 >= HALF)


def test_question1_profile():
    q = question1_profile(SetFamily.power_set(2))

    assert q.c1 == q.c2 == HALF
    assert (q.first, q.second) == (1, 2)
    assert q.t_value == 1

    with pytest.raises(InvalidArgumentException):
        question1_profile(fam(3, [], [1]))


def test_t2_profile():
    report = t2_profile_check(fam(3, [1, 2], [2, 3], [1, 2, 3]))

    assert report.holds
    assert report.witnesses[0].ratio == 1
    assert report.witnesses[1].ratio == Ratio(2, 3)

    assert t2_profile_check(fam(2, [1])).verdict is Verdict.NOT_APPLICABLE


def test_t2_profile_exhaustive_n4():
    for f in enumerate_dense(EnumConfig(4)):
        assert not t2_profile_check(f).fails
