import pytest

from ucf import (
    Ratio,
    Verdict,
    CheckName,
    MembershipException,
    SetSizeException,
    nagel_lemma_check,
    two_set_majority,
    prop34_witness,
    small_set_frankl,
    nagel_bound
)
from ucf.bounds import prop34_reduction
from ucf.common.utils import (
    mask_of,
    popcount
)
from ucf.enumeration import (
    EnumConfig,
    enumerate_dense
)

from .common import fam


def test_nagel_lemma_singleton():
    f = fam(3, [], [1], [1, 2], [1, 2, 3])
    report = nagel_lemma_check(f, mask_of([1]))

    assert report.context is CheckName.LEMMA33
    assert report.holds
    assert report.bound == Ratio(1, 2)


def test_nagel_lemma_errors():
    f = fam(2, [], [1])

    with pytest.raises(SetSizeException, match='at least one element'):
        nagel_lemma_check(f, 0)

    with pytest.raises(MembershipException, match=r'\{2\}'):
        nagel_lemma_check(f, mask_of([2]))


def test_two_set_majority():
    assert two_set_majority(fam(2, [1, 2]), mask_of([1, 2])) == 1

    f = fam(3, [1, 2], [2], [2, 3], [1, 2, 3])
    assert two_set_majority(f, mask_of([1, 2])) == 2

    with pytest.raises(SetSizeException, match='exactly two'):
        two_set_majority(f, mask_of([1, 2, 3]))


def test_prop34_witness():
    f = fam(3, [1, 2], [2], [2, 3], [1, 2, 3])

    y, ratio = prop34_witness(f, mask_of([1, 2, 3]))
    assert y == 1
    assert ratio == Ratio(1, 2)

    with pytest.raises(SetSizeException):
        prop34_witness(fam(2, [1]), mask_of([1]))


def test_prop34_reduction():
    f = fam(3, [1, 2], [2], [2, 3], [1, 2, 3])
    reduction = prop34_reduction(f, mask_of([1, 2, 3]))

    assert reduction.bound == Ratio(1, 3)
    assert reduction.element == 2
    assert reduction.achieved == 1
    assert [level.deleted for level in reduction.levels] == [1, None]
    assert [level.guaranteed for level in reduction.levels] \
        == [Ratio(1, 3), Ratio(1, 2)]


def test_small_set_frankl():
    report = small_set_frankl(fam(3, [1], [1, 2, 3]))

    assert report.holds
    assert report.witnesses[0].element == 1
    assert report.detail['t_value'] == 1

    report = small_set_frankl(fam(3, [1, 2, 3]))
    assert report.verdict is Verdict.NOT_APPLICABLE


def test_members_exhaustive_n4():
    for f in enumerate_dense(EnumConfig(4)):
        for mask in f.masks:
            size = popcount(mask)

            if size:
                assert nagel_lemma_check(f, mask).holds

            if size == 2:
                y = two_set_majority(f, mask)
                assert 2 * f.count(y) >= len(f)

            if size >= 2:
                _, ratio = prop34_witness(f, mask)
                assert ratio >= nagel_bound(size - 1)

                reduction = prop34_reduction(f, mask)
                assert reduction.achieved >= reduction.bound
                assert len(reduction.levels) == size - 1

        assert not small_set_frankl(f).fails


def test_lemma33_members_have_prop34_witness():
    for n in range(2, 5):
        for f in enumerate_dense(EnumConfig(n)):
            for mask in f.masks:
                size = popcount(mask)
                if size < 2:
                    continue

                report = nagel_lemma_check(f, mask)
                assert report.holds

                y, ratio = prop34_witness(f, mask)
                ratios = {w.element: w.ratio for w in report.witnesses}

                assert y in ratios
                assert ratios[y] == ratio
                assert ratio >= nagel_bound(size - 1) >= report.bound
