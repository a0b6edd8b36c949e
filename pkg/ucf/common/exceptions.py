# coding=utf-8

from typing import (
    Any,
    Optional,
    Tuple
)

from .utils import format_msg, format_mask


class UCFException(Exception):
    """Base class of every error raised by ucf
    """


class InvalidGroundSetException(UCFException):
    def __init__(
        self,
        n: Any
    ) -> None:
        self.n = n

    def __str__(self) -> str:
        return format_msg(
            'ground set size must be an integer in [1, 24], but got `%s`',
            self.n
        )


class ElementOutOfRangeException(UCFException):
    def __init__(
        self,
        element: Any,
        n: int
    ) -> None:
        self.element = element
        self.n = n

    def __str__(self) -> str:
        return format_msg(
            'element `%s` is not in the ground set {1, ..., %s}',
            self.element,
            self.n
        )


class EmptyFamilyException(UCFException):
    def __str__(self) -> str:
        return format_msg('a set family must have at least one member')


class NotUnionClosedException(UCFException):
    def __init__(
        self,
        pair: Optional[Tuple[int, int]] = None
    ) -> None:
        self.pair = pair

    def __str__(self) -> str:
        if self.pair is None:
            return format_msg('the family is not union-closed')

        a, b = self.pair
        return format_msg(
            'the family is not union-closed: %s ∪ %s = %s is missing',
            format_mask(a),
            format_mask(b),
            format_mask(a | b)
        )


class TrivialFamilyException(UCFException):
    def __str__(self) -> str:
        return format_msg('the family {∅} is excluded')


class MembershipException(UCFException):
    def __init__(
        self,
        mask: int
    ) -> None:
        self.mask = mask

    def __str__(self) -> str:
        return format_msg(
            'set %s is not a member of the family',
            format_mask(self.mask)
        )


class SetSizeException(UCFException):
    def __init__(
        self,
        mask: int,
        expected: str
    ) -> None:
        self.mask = mask
        self.expected = expected

    def __str__(self) -> str:
        return format_msg(
            'set %s has the wrong size, %s expected',
            format_mask(self.mask),
            self.expected
        )


class InvalidRatioException(UCFException):
    def __init__(
        self,
        value: Any,
        reason: str
    ) -> None:
        self.value = value
        self.reason = reason

    def __str__(self) -> str:
        return format_msg('invalid ratio `%s`: %s', self.value, self.reason)


class InvalidArgumentException(UCFException):
    def __init__(
        self,
        name: str,
        reason: str
    ) -> None:
        self.name = name
        self.reason = reason

    def __str__(self) -> str:
        return format_msg('invalid argument `%s`, %s', self.name, self.reason)


class CanonicalizationLimitException(UCFException):
    def __init__(
        self,
        n: int,
        limit: int
    ) -> None:
        self.n = n
        self.limit = limit

    def __str__(self) -> str:
        return format_msg(
            'brute-force canonical form needs n <= %s, but got n = %s',
            self.limit,
            self.n
        )


class EnumerationLimitException(UCFException):
    def __init__(
        self,
        mode: Any,
        n: int,
        limit: int
    ) -> None:
        self.mode = mode
        self.n = n
        self.limit = limit

    def __str__(self) -> str:
        return format_msg(
            '%s enumeration supports n <= %s, but got n = %s',
            self.mode,
            self.limit,
            self.n
        )


class UnknownCheckException(UCFException):
    def __init__(
        self,
        name: Any
    ) -> None:
        self.name = name

    def __str__(self) -> str:
        return format_msg('check "%s" is not supported', self.name)


class FamilyParseException(UCFException):
    def __init__(
        self,
        line: int,
        reason: str
    ) -> None:
        self.line = line
        self.reason = reason

    def __str__(self) -> str:
        return format_msg('line %s: %s', self.line, self.reason)


class InvalidConfigException(UCFException):
    def __init__(
        self,
        field: str,
        reason: str
    ) -> None:
        self.field = field
        self.reason = reason

    def __str__(self) -> str:
        return format_msg(
            'invalid config field `%s`, %s',
            self.field,
            self.reason
        )


class CheckpointException(UCFException):
    def __init__(
        self,
        path: str,
        reason: str
    ) -> None:
        self.path = path
        self.reason = reason

    def __str__(self) -> str:
        return format_msg(
            'checkpoint "%s" can not be used: %s',
            self.path,
            self.reason
        )


class TheoremViolationException(Exception):
    """A statement that is proven for the instance failed.

    This is never a property of the input, it is a defect of ucf itself.
    """

    def __init__(
        self,
        statement: str,
        detail: str
    ) -> None:
        self.statement = statement
        self.detail = detail

    def __str__(self) -> str:
        return format_msg(
            '%s failed on a proven instance, %s',
            self.statement,
            self.detail
        )
