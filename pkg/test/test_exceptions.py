import pytest

import ucf
from ucf import (
    UCFException,
    TheoremViolationException,
    NotUnionClosedException,
    FamilyParseException,
    ElementOutOfRangeException,
    InvalidGroundSetException,
    CanonicalizationLimitException,
    EnumerationLimitException,
    CheckpointException,
    EnumMode
)
from ucf.common.constants import MSG_PREFIX


@pytest.mark.parametrize('exception, message', [
    (NotUnionClosedException(), 'the family is not union-closed'),
    (NotUnionClosedException((0b01, 0b10)), '{1} ∪ {2} = {1,2} is missing'),
    (FamilyParseException(7, 'oops'), 'line 7: oops'),
    (ElementOutOfRangeException(5, 3), 'element `5` is not in the ground set {1, ..., 3}'),
    (InvalidGroundSetException(30), 'but got `30`'),
    (CanonicalizationLimitException(9, 8), 'n <= 8, but got n = 9'),
    (EnumerationLimitException(EnumMode.DENSE, 5, 4), 'dense enumeration supports n <= 4'),
    (CheckpointException('a.json', 'broken'), 'checkpoint "a.json" can not be used: broken'),
])
def test_messages(exception, message):
    text = str(exception)

    assert text.startswith(MSG_PREFIX)
    assert message in text
    assert isinstance(exception, UCFException)


def test_theorem_violation_is_not_a_usage_error():
    e = TheoremViolationException('deletion lemma', 'bad level')

    assert not isinstance(e, UCFException)
    assert str(e) == MSG_PREFIX + \
        'deletion lemma failed on a proven instance, bad level'


def test_exceptions_are_exported():
    names = [
        name for name in dir(ucf)
        if name.endswith('Exception')
    ]

    assert 'UCFException' in names
    assert len(names) == 17
