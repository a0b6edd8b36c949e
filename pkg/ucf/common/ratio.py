from fractions import Fraction
from typing import Union

from .exceptions import InvalidRatioException
from .types import JSONObject


RatioLike = Union['Ratio', Fraction, int, str]


class Ratio(Fraction):
    """A non-negative exact rational, always in lowest terms.

    Every ratio that takes part in a verdict (c, c1, c2, |F_j|/|F|) is a
    `Ratio`. Floats only ever appear in `describe()`::

        >>> Ratio(2, 6)
        Ratio(1, 3)
        >>> Ratio('38234/100000').describe()
        '19117/50000 (≈ 0.382340)'
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        try:
            self = super().__new__(cls, numerator, denominator)
        except (ZeroDivisionError, ValueError, TypeError) as e:
            raise InvalidRatioException(
                numerator if denominator is None
                else f'{numerator}/{denominator}',
                str(e) or type(e).__name__
            )

        if self < 0:
            raise InvalidRatioException(self, 'must not be negative')

        return self

    @classmethod
    def of(cls, value: RatioLike) -> 'Ratio':
        return value if isinstance(value, Ratio) else cls(value)

    @property
    def num(self) -> int:
        return self.numerator

    @property
    def den(self) -> int:
        return self.denominator

    def ge(self, num: int, den: int) -> bool:
        """Exact `self >= num / den` by cross-multiplication
        """

        return self.numerator * den >= num * self.denominator

    def describe(self) -> str:
        return f'{self.numerator}/{self.denominator} (≈ {float(self):.6f})'

    def to_json(self) -> JSONObject:
        return dict(num=self.numerator, den=self.denominator)

    @classmethod
    def from_json(cls, obj: JSONObject) -> 'Ratio':
        return cls(obj['num'], obj['den'])

    def __repr__(self) -> str:
        return f'Ratio({self.numerator}, {self.denominator})'

    def __reduce__(self):
        return (type(self), (self.numerator, self.denominator))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


def nagel_bound(k: int) -> Ratio:
    """1 / (2^(k-1) + 1), the bound for the k-th most frequent element
    """

    return Ratio(1, (1 << (k - 1)) + 1)
