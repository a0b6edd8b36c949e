import json
import logging
from dataclasses import dataclass
from typing import (
    Dict,
    Iterable,
    List,
    Tuple
)

from ucf.common.constants import (
    Objective,
    NON_SPANNING_PENALTY,
    CHECKPOINT_VERSION
)
from ucf.common.exceptions import (
    InvalidArgumentException,
    CheckpointException
)
from ucf.common.ratio import Ratio
from ucf.common.types import (
    JSONObject,
    Mask
)
from ucf.common.utils import (
    format_msg,
    json_stringify,
    repr_exception
)
from ucf.family import (
    SetFamily,
    family_from_generators,
    parse_family,
    format_family
)


logger = logging.getLogger(__name__)

Key = Tuple[Ratio, ...]


@dataclass(frozen=True)
class Evaluation:
    family: SetFamily
    c1: Ratio
    c2: Ratio
    spanning: bool

    def key(self, objective: Objective) -> Key:
        """The minimized objective, non-spanning closures are pushed up by
        a constant so the walk may still pass through them
        """

        penalty = 0 if self.spanning else NON_SPANNING_PENALTY

        if objective is Objective.MIN_C1:
            return (self.c1 + penalty,)

        return (self.c1 + penalty, self.c2 + penalty)


def evaluate(n: int, generators: Iterable[Mask]) -> Evaluation:
    family = family_from_generators(n, generators)
    profile = family.frequency_profile()

    return Evaluation(
        family=family,
        c1=profile.ratio(profile.ranked(1)),
        c2=profile.ratio(profile.ranked(2)),
        spanning=family.is_spanning()
    )


@dataclass(frozen=True)
class SearchRecord:
    n: int
    objective: Objective
    seed: int
    restart: int
    iteration: int
    # distinct generators, ascending
    generators: Tuple[Mask, ...]
    family: SetFamily
    c1: Ratio
    c2: Ratio
    spanning: bool

    @classmethod
    def create(
        cls,
        n: int,
        objective: Objective,
        seed: int,
        restart: int,
        iteration: int,
        generators: Iterable[Mask],
        evaluation: Evaluation
    ) -> 'SearchRecord':
        return cls(
            n=n,
            objective=objective,
            seed=seed,
            restart=restart,
            iteration=iteration,
            generators=tuple(sorted(set(generators))),
            family=evaluation.family,
            c1=evaluation.c1,
            c2=evaluation.c2,
            spanning=evaluation.spanning
        )

    def key(self) -> Key:
        return Evaluation(
            self.family, self.c1, self.c2, self.spanning
        ).key(self.objective)

    def to_json(self) -> JSONObject:
        return dict(
            n=self.n,
            objective=str(self.objective),
            seed=self.seed,
            restart=self.restart,
            iteration=self.iteration,
            generators=format_family(
                SetFamily(self.n, self.generators)),
            family=format_family(self.family),
            family_size=len(self.family),
            c1=self.c1.to_json(),
            c2=self.c2.to_json(),
            c1_decimal=round(float(self.c1), 6),
            c2_decimal=round(float(self.c2), 6),
            spanning=self.spanning
        )

    @classmethod
    def from_json(cls, obj: JSONObject) -> 'SearchRecord':
        return cls(
            n=obj['n'],
            objective=Objective(obj['objective']),
            seed=obj['seed'],
            restart=obj['restart'],
            iteration=obj['iteration'],
            generators=parse_family(obj['generators']).masks,
            family=parse_family(obj['family']),
            c1=Ratio.from_json(obj['c1']),
            c2=Ratio.from_json(obj['c2']),
            spanning=obj['spanning']
        )


def verify_record(rec: SearchRecord, strict: bool = False) -> bool:
    """Re-closes the generators and recomputes (c1, c2) from scratch
    """

    family = SetFamily(rec.n, rec.generators).union_closure()
    profile = family.frequency_profile()
    c1 = Ratio(profile.count(profile.ranked(1)), profile.total)
    c2 = Ratio(profile.count(profile.ranked(2)), profile.total)

    ok = (
        family == rec.family
        and family.is_union_closed()
        and (c1, c2) == (rec.c1, rec.c2)
        and family.is_spanning() == rec.spanning
    )

    if not ok:
        message = format_msg(
            'record of seed %s restart %s does not verify, '
            'stored (c1, c2) = (%s, %s), recomputed (%s, %s)',
            rec.seed, rec.restart, rec.c1, rec.c2, c1, c2
        )
        logger.warning(message)

        if strict:
            raise InvalidArgumentException('rec', message)

    return ok


def save_checkpoint(
    path: str,
    cfg_json: JSONObject,
    states: List[JSONObject]
) -> None:
    obj = dict(
        version=CHECKPOINT_VERSION,
        config=cfg_json,
        restarts=states
    )

    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(json_stringify(obj, pretty=True))
    except OSError as e:
        raise CheckpointException(path, repr_exception(e))


def load_checkpoint(
    path: str,
    cfg_json: JSONObject
) -> Dict[int, JSONObject]:
    """Returns the saved restart states of `path` by restart index.

    The checkpoint must come from the same run, only `iterations` may grow.
    """

    try:
        with open(path, encoding='utf-8') as f:
            obj = json.load(f)
    except (OSError, ValueError) as e:
        raise CheckpointException(path, repr_exception(e))

    if not isinstance(obj, dict) or obj.get('version') != CHECKPOINT_VERSION:
        raise CheckpointException(path, 'unsupported checkpoint version')

    saved = dict(obj.get('config') or {})
    expected = dict(cfg_json)
    saved.pop('iterations', None)
    expected.pop('iterations', None)

    if saved != expected:
        raise CheckpointException(
            path, 'it was written by a run with a different configuration')

    states = {}

    for state in obj.get('restarts', []):
        if state['iteration'] > cfg_json['iterations']:
            raise CheckpointException(
                path,
                f'restart {state["restart"]} is already past '
                f'{cfg_json["iterations"]} iterations'
            )

        states[state['restart']] = state

    return states
