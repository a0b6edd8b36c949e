from typing import (
    Iterable,
    List,
    Union
)

from ucf.common.constants import CheckName
from ucf.common.exceptions import UnknownCheckException

from .base import (
    Check,
    Outcome
)

from .checks import (
    FranklCheck,
    NagelCheck,
    ChainCheck,
    SFranklCheck,
    Lemma1Check,
    Eq21Check,
    Lemma33Check,
    Prop34Check,
    TwoSetCheck,
    SmallSetCheck,
    Question1T2Check
)


CHECKS = [
    FranklCheck,
    NagelCheck,
    ChainCheck,
    SFranklCheck,
    Lemma1Check,
    Eq21Check,
    Lemma33Check,
    Prop34Check,
    TwoSetCheck,
    SmallSetCheck,
    Question1T2Check
]

CHECK_NAMES = [str(Factory.NAME) for Factory in CHECKS]


def resolve_checks(
    names: Iterable[Union[str, CheckName]]
) -> List[Check]:
    """Instantiates the checks for `names`, keeping their order and
    dropping repetitions
    """

    table = {Factory.NAME: Factory for Factory in CHECKS}
    checks = []
    seen = set()

    for name in names:
        try:
            key = name if isinstance(name, CheckName) else CheckName(name)
        except ValueError:
            raise UnknownCheckException(name)

        if key not in seen:
            seen.add(key)
            checks.append(table[key]())

    if not checks:
        raise UnknownCheckException('')

    return checks
