import random

import numpy as np
import pytest
from hypothesis import (
    given,
    settings,
    strategies as st
)

from ucf import (
    GroundSet,
    ElementSet,
    SetFamily,
    Ratio,
    family_from_generators,
    InvalidGroundSetException,
    ElementOutOfRangeException,
    EmptyFamilyException,
    NotUnionClosedException
)
from ucf.enumeration import (
    EnumConfig,
    enumerate_dense
)
from ucf.family import union_closure_masks

from .common import (
    fam,
    as_sets,
    oracle_is_closed,
    oracle_closure,
    oracle_counts,
    oracle_delete
)


def test_ground_set():
    ground = GroundSet(3)

    assert ground.full_mask == 0b111
    assert list(ground.elements) == [1, 2, 3]

    for n in (0, 25, 1.5, '3'):
        with pytest.raises(InvalidGroundSetException):
            GroundSet(n)

    with pytest.raises(ElementOutOfRangeException, match='`4`'):
        ground.check_element(4)

    with pytest.raises(ElementOutOfRangeException):
        ground.check_mask(0b1000)


def test_element_set():
    a = ElementSet.of(4, [3, 1])

    assert a.bits == 0b101
    assert a.elements() == [1, 3]
    assert len(a) == a.cardinality() == 2
    assert 3 in a and 2 not in a and 9 not in a
    assert str(a) == '{1,3}'
    assert str(a.without(1)) == '{3}'
    assert (a | ElementSet.of(4, [2])).elements() == [1, 2, 3]
    assert str(ElementSet(0, 4)) == '∅'

    with pytest.raises(ElementOutOfRangeException):
        ElementSet.of(2, [3])


def test_construction():
    f = SetFamily(3, [0b11, 0b1, 0b11, ElementSet.of(3, [2])])

    assert f.masks == (1, 2, 3)
    assert len(f) == 3
    assert ElementSet.of(3, [1, 2]) in f
    assert 0 not in f
    assert f == fam(3, [1], [2], [1, 2])
    assert f != fam(4, [1], [2], [1, 2])
    assert hash(f) == hash(fam(3, [2], [1], [2, 1]))
    assert str(f) == '{{1}, {2}, {1,2}}'
    assert repr(f) == 'SetFamily(3, [1, 2, 3])'
    assert [m.elements() for m in f] == [[1], [2], [1, 2]]

    with pytest.raises(EmptyFamilyException):
        SetFamily(3, [])

    with pytest.raises(ElementOutOfRangeException):
        SetFamily(2, [0b100])


def test_is_union_closed():
    assert fam(2, [1], [2], [1, 2]).is_union_closed()
    assert not fam(2, [1], [2]).is_union_closed()
    assert fam(1, []).is_union_closed()


def test_closure_violation():
    f = fam(3, [1], [2], [3], [1, 2])

    assert f.find_closure_violation() == (0b1, 0b100)

    with pytest.raises(NotUnionClosedException, match=r'\{1\} ∪ \{3\} = \{1,3\}'):
        f.require_union_closed()

    assert f.closed is False
    assert fam(2, [1], [2], [1, 2]).require_union_closed().closed is True


def test_union_closure():
    assert fam(2, [1], [2]).union_closure() == fam(2, [1], [2], [1, 2])

    closed = fam(3, [1], [1, 2])
    assert closed.union_closure() is closed

    triangle = fam(3, [1, 2], [2, 3], [1, 3]).union_closure()
    assert triangle == fam(3, [1, 2], [2, 3], [1, 3], [1, 2, 3])
    assert as_sets(triangle) == oracle_closure(
        as_sets(fam(3, [1, 2], [2, 3], [1, 3])))


def test_ground_union_and_t_value():
    assert fam(3, [1], [3]).union_mask == 0b101
    assert fam(3, [1], [3]).ground_union().elements() == [1, 3]
    assert fam(1, []).union_mask == 0
    assert fam(2, [1], [2], [1, 2]).is_spanning()
    assert not fam(3, [1], [2], [1, 2]).is_spanning()

    assert fam(3, [1, 2], [1, 2, 3]).t_value() == 2
    assert fam(2, [], [1], [1, 2]).t_value() == 1
    assert fam(2, []).t_value() is None
    assert fam(2, []).is_trivial()


def test_frequency_profile():
    profile = fam(2, [1], [1, 2]).frequency_profile()

    assert profile.counts == (2, 1)
    assert profile.order == (1, 2)
    assert profile.total == 2
    assert profile.ratio(2) == Ratio(1, 2)
    assert profile.abundant() == [1, 2]

    profile = SetFamily.power_set(2).frequency_profile()
    assert profile.counts == (2, 2)
    assert profile.total == 4

    # ties go to the smaller element
    profile = fam(3, [3], [2, 3], [1, 2]).union_closure().frequency_profile()
    assert profile.counts == (2, 3, 3)
    assert profile.order == (2, 3, 1)
    assert profile.ranked(1) == 2


def test_incidence():
    f = fam(3, [1], [1, 3])
    matrix = f.incidence()

    assert matrix.shape == (2, 3)
    assert np.array_equal(matrix, np.array([[1, 0, 0], [1, 0, 1]]))


def test_random_profiles_against_recount():
    rng = random.Random(10)

    for _ in range(20):
        f = family_from_generators(
            10, [rng.randrange(1, 1 << 10) for _ in range(5)])
        counts = oracle_counts(10, as_sets(f))

        assert list(f.frequency_profile().counts) == counts
        assert [f.count(e) for e in range(1, 11)] == counts


def test_delete_element():
    assert fam(2, [1], [1, 2]).delete_element(1) == fam(2, [], [2])
    assert fam(3, [1, 2], [2], [1, 2, 3]).delete_element(2) \
        == fam(3, [1], [], [1, 3])

    f = fam(3, [1], [1, 2])
    assert f.delete_element(3) == f

    with pytest.raises(ElementOutOfRangeException):
        f.delete_element(4)


def assert_deletion_invariants(f):
    t = f.t_value()

    for i in range(1, f.n + 1):
        g = f.delete_element(i)

        assert g.is_union_closed()

        if t is not None and g.t_value() is not None:
            assert g.t_value() >= t - 1


def test_deletion_invariants_exhaustive():
    for n in range(1, 4):
        for f in enumerate_dense(EnumConfig(n)):
            assert_deletion_invariants(f)

            for i in range(1, n + 1):
                assert oracle_is_closed(as_sets(f.delete_element(i)))


def test_deletion_invariants_random():
    rng = random.Random(12)

    for _ in range(1000):
        n = rng.randint(2, 12)
        f = family_from_generators(
            n, [rng.randrange(0, 1 << n) for _ in range(rng.randint(1, 6))])

        assert_deletion_invariants(f)


def test_filters():
    f = fam(2, [1], [2], [1, 2]).require_union_closed()

    assert f.filter_containing(1) == fam(2, [1], [1, 2])
    assert f.filter_not_containing(1) == fam(2, [2])
    assert f.filter_containing(1).closed is True

    g = fam(3, [1], [2], [1, 2])
    assert g.filter_containing(3) is None
    assert g.filter_not_containing(3) == g


def test_relabel_and_canonical_form():
    f = fam(3, [2], [2, 3])

    assert f.relabel({1: 3, 2: 1, 3: 2}) == fam(3, [1], [1, 2])
    assert f.canonical_form() == fam(3, [1], [1, 2]).canonical_form()
    assert f.canonical_form().canonical_form() == f.canonical_form()


def test_power_set():
    assert len(SetFamily.power_set(3)) == 8
    assert len(SetFamily.power_set(3, with_empty=False)) == 7
    assert SetFamily.power_set(4, 2) == fam(4, [], [1], [2], [1, 2])


def test_family_from_generators():
    assert family_from_generators(3, [0b011, 0b110]) \
        == fam(3, [1, 2], [2, 3], [1, 2, 3])
    assert family_from_generators(2, [0]) == fam(2, [])

    with pytest.raises(EmptyFamilyException):
        family_from_generators(2, [])


masks_strategy = st.lists(
    st.integers(min_value=0, max_value=(1 << 5) - 1),
    min_size=1,
    max_size=8
)


@given(masks_strategy)
@settings(max_examples=200, deadline=None)
def test_closure_properties(masks):
    f = family_from_generators(5, masks)
    sets = as_sets(f)

    # closed, contains the generators, and is the smallest such family
    assert oracle_is_closed(sets)
    assert set(masks) <= set(f.masks)
    assert sets == oracle_closure(as_sets(SetFamily(5, masks)))
    assert set(union_closure_masks(f.masks)) == set(f.masks)

    for i in range(1, 6):
        deleted = f.delete_element(i)
        assert as_sets(deleted) == oracle_delete(sets, i)
        assert deleted.is_union_closed()

        parts = [
            part for part in (
                f.filter_containing(i), f.filter_not_containing(i))
            if part is not None
        ]
        assert sum(len(part) for part in parts) == len(f)
        assert all(part.is_union_closed() for part in parts)
