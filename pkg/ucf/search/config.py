from dataclasses import (
    dataclass,
    asdict
)
from typing import (
    Optional,
    Tuple
)

from ucf.common.constants import (
    Objective,
    MAX_SEARCH_N,
    DEFAULT_INITIAL_TEMPERATURE,
    DEFAULT_TEMPERATURE_DECAY,
    DEFAULT_ITERATIONS,
    DEFAULT_RESTARTS,
    DEFAULT_AUDIT_DIR
)
from ucf.common.exceptions import InvalidConfigException
from ucf.common.types import JSONObject


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of a simulated-annealing run.

    The temperature at iteration t is `initial_temperature * decay ** t`.
    Restart r draws from its own generator seeded with `seed + r`.
    """

    n: int
    objective: Objective = Objective.MIN_C1
    iterations: int = DEFAULT_ITERATIONS
    seed: int = 0
    restarts: int = DEFAULT_RESTARTS
    initial_temperature: float = DEFAULT_INITIAL_TEMPERATURE
    decay: float = DEFAULT_TEMPERATURE_DECAY
    min_generators: int = 1
    # defaults to 2n
    max_generators: Optional[int] = None
    initial_generators: Optional[Tuple[int, ...]] = None
    audit_dir: str = DEFAULT_AUDIT_DIR

    def __post_init__(self) -> None:
        if type(self.n) is not int or not 2 <= self.n <= MAX_SEARCH_N:
            raise InvalidConfigException(
                'n', f'must be in [2, {MAX_SEARCH_N}] but got `{self.n}`')

        if not isinstance(self.objective, Objective):
            raise InvalidConfigException(
                'objective',
                f'`Objective` expected but got `{self.objective}`'
            )

        if self.iterations <= 0:
            raise InvalidConfigException(
                'iterations', f'must be positive but got {self.iterations}')

        if self.restarts <= 0:
            raise InvalidConfigException(
                'restarts', f'must be positive but got {self.restarts}')

        if not 0 < self.decay <= 1:
            raise InvalidConfigException(
                'decay', f'must be in (0, 1] but got {self.decay}')

        if self.initial_temperature < 0:
            raise InvalidConfigException(
                'initial_temperature',
                f'must not be negative but got {self.initial_temperature}'
            )

        if self.seed < 0:
            raise InvalidConfigException(
                'seed', f'must not be negative but got {self.seed}')

        if not 1 <= self.min_generators <= self.pool_max:
            raise InvalidConfigException(
                'min_generators',
                f'must be in [1, {self.pool_max}] but got {self.min_generators}'
            )

        if self.initial_generators is not None:
            top = 1 << self.n

            if not self.initial_generators:
                raise InvalidConfigException(
                    'initial_generators', 'must not be empty')

            for g in self.initial_generators:
                if not 0 <= g < top:
                    raise InvalidConfigException(
                        'initial_generators',
                        f'{g} is not a subset of M_{self.n}'
                    )

    @property
    def pool_max(self) -> int:
        if self.max_generators is None:
            return 2 * self.n

        return self.max_generators

    def to_json(self) -> JSONObject:
        obj = asdict(self)
        obj['objective'] = str(self.objective)
        obj['max_generators'] = self.pool_max

        if self.initial_generators is not None:
            obj['initial_generators'] = list(self.initial_generators)

        # output location only, not part of the run
        del obj['audit_dir']
        return obj
