from typing import Iterator

from ucf.common.constants import EnumMode
from ucf.family import SetFamily

from .config import (
    EnumConfig,
    RandomConfig
)

from .dense import (
    enumerate_dense,
    candidate_count
)

from .generation import enumerate_canonical

from .sampling import (
    random_generators,
    random_closed_family,
    random_closed_families
)

from .sweep import (
    Tally,
    SweepReport,
    sweep,
    sweep_async
)


def enumerate_families(cfg: EnumConfig) -> Iterator[SetFamily]:
    """Dispatches on `cfg.mode`
    """

    if cfg.mode is EnumMode.CANONICAL:
        return enumerate_canonical(cfg)

    return enumerate_dense(cfg)
