from dataclasses import (
    dataclass,
    asdict
)
from typing import Optional

from ucf.common.constants import (
    EnumMode,
    MAX_GROUND_SIZE,
    MAX_DENSE_N,
    MAX_CANONICAL_GEN_N
)
from ucf.common.exceptions import (
    InvalidConfigException,
    EnumerationLimitException
)
from ucf.common.types import JSONObject


@dataclass(frozen=True)
class EnumConfig:
    n: int
    spanning: bool = False
    allow_empty_member: bool = True
    # drops the family {∅}
    exclude_trivial: bool = False
    mode: EnumMode = EnumMode.DENSE
    limit: Optional[int] = None

    def __post_init__(self) -> None:
        if type(self.n) is not int or self.n < 1:
            raise InvalidConfigException(
                'n', f'positive integer expected but got `{self.n}`')

        if not isinstance(self.mode, EnumMode):
            raise InvalidConfigException(
                'mode', f'`EnumMode` expected but got `{self.mode}`')

        cap = MAX_DENSE_N if self.mode is EnumMode.DENSE \
            else MAX_CANONICAL_GEN_N

        if self.n > cap:
            raise EnumerationLimitException(self.mode, self.n, cap)

        if self.limit is not None and self.limit < 0:
            raise InvalidConfigException(
                'limit', f'must not be negative but got {self.limit}')

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def accepts(self, masks, union: int) -> bool:
        """The config filters, for a union-closed family given by its
        sorted members and their union
        """

        if self.spanning and union != self.full_mask:
            return False

        # masks are sorted, so ∅ can only come first
        if not self.allow_empty_member and masks[0] == 0:
            return False

        if self.exclude_trivial and masks == (0,):
            return False

        return True

    def to_json(self) -> JSONObject:
        obj = asdict(self)
        obj['mode'] = str(self.mode)
        return obj


@dataclass(frozen=True)
class RandomConfig:
    n: int
    generator_count: int
    seed: int = 0

    def __post_init__(self) -> None:
        if type(self.n) is not int or not 1 <= self.n <= MAX_GROUND_SIZE:
            raise InvalidConfigException(
                'n', f'must be in [1, {MAX_GROUND_SIZE}] but got `{self.n}`')

        if self.generator_count < 1:
            raise InvalidConfigException(
                'generator_count',
                f'must be positive but got {self.generator_count}'
            )

        if not 0 <= self.seed < 1 << 64:
            raise InvalidConfigException(
                'seed', f'64-bit unsigned integer expected but got {self.seed}')
