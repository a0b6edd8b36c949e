import asyncio
import logging
import math
import os
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import (
    List,
    Optional,
    Tuple
)

from ucf.common.constants import (
    Enum,
    LEX_ACCEPT_WEIGHT
)
from ucf.common.ratio import Ratio
from ucf.common.types import (
    JSONObject,
    Mask
)
from ucf.common.utils import (
    format_msg,
    json_stringify
)

from .config import SearchConfig
from .record import (
    Evaluation,
    Key,
    SearchRecord,
    evaluate,
    load_checkpoint,
    save_checkpoint
)


logger = logging.getLogger(__name__)

HALF = Ratio(1, 2)


class Move(Enum):
    ADD = 'add'
    REMOVE = 'remove'
    TOGGLE = 'toggle'


def energy(key: Key) -> float:
    # Only used by the acceptance rule, comparisons of keys stay exact
    value = float(key[0])

    if len(key) > 1:
        value += LEX_ACCEPT_WEIGHT * float(key[1])

    return value


class Annealer:
    """One restart of the simulated annealing walk over generator multisets.

    Usage::

        annealer = Annealer(SearchConfig(3, iterations=500), restart=0)
        record = annealer.run()
    """

    def __init__(
        self,
        cfg: SearchConfig,
        restart: int = 0
    ) -> None:
        self._cfg = cfg
        self._restart = restart
        self._rng = random.Random(cfg.seed + restart)
        self._iteration = 0
        self.history: List[Tuple[int, Key]] = []

        if cfg.initial_generators is not None:
            self._generators = list(cfg.initial_generators)
        else:
            count = max(cfg.min_generators, min(cfg.n, cfg.pool_max))
            self._generators = [
                self._rng.randrange(1, 1 << cfg.n) for _ in range(count)
            ]

        self._set_current(evaluate(cfg.n, self._generators))
        self._set_best()

    def _set_current(self, evaluation: Evaluation) -> None:
        self._current = evaluation
        self._current_key = evaluation.key(self._cfg.objective)

    def _set_best(self) -> None:
        cfg = self._cfg
        self._best = SearchRecord.create(
            n=cfg.n,
            objective=cfg.objective,
            seed=cfg.seed,
            restart=self._restart,
            iteration=self._iteration,
            generators=self._generators,
            evaluation=self._current
        )
        self._best_key = self._current_key
        self.history.append((self._iteration, self._best_key))

    @property
    def restart(self) -> int:
        return self._restart

    @property
    def iteration(self) -> int:
        return self._iteration

    @property
    def generators(self) -> List[Mask]:
        return list(self._generators)

    @property
    def current(self) -> Evaluation:
        return self._current

    @property
    def best(self) -> SearchRecord:
        return self._best

    @property
    def temperature(self) -> float:
        cfg = self._cfg
        return cfg.initial_temperature * cfg.decay ** self._iteration

    def _propose(self) -> List[Mask]:
        cfg = self._cfg
        rng = self._rng
        generators = list(self._generators)

        moves = [Move.TOGGLE]
        if len(generators) < cfg.pool_max:
            moves.append(Move.ADD)
        if len(generators) > cfg.min_generators:
            moves.append(Move.REMOVE)

        move = rng.choice(moves)

        if move is Move.ADD:
            generators.append(rng.randrange(0, 1 << cfg.n))
        elif move is Move.REMOVE:
            del generators[rng.randrange(len(generators))]
        else:
            index = rng.randrange(len(generators))
            generators[index] ^= 1 << rng.randrange(cfg.n)

        return generators

    def _accept(self, key: Key) -> bool:
        if key <= self._current_key:
            return True

        temperature = self.temperature

        if temperature <= 0:
            return False

        delta = energy(key) - energy(self._current_key)
        return self._rng.random() < math.exp(-delta / temperature)

    def step(self) -> bool:
        """Proposes one move, returns whether it was accepted
        """

        generators = self._propose()
        evaluation = evaluate(self._cfg.n, generators)
        key = evaluation.key(self._cfg.objective)
        accepted = self._accept(key)

        self._iteration += 1

        if accepted:
            self._generators = generators
            self._set_current(evaluation)

            if key < self._best_key:
                self._set_best()

        return accepted

    def run(self) -> SearchRecord:
        while self._iteration < self._cfg.iterations:
            self.step()

        logger.info(format_msg(
            'restart %s finished at iteration %s, best c1=%s c2=%s',
            self._restart,
            self._iteration,
            self._best.c1,
            self._best.c2
        ))

        return self._best

    # -------------------------------------------------
    # Checkpoints

    def state(self) -> JSONObject:
        version, internal, gauss = self._rng.getstate()

        return dict(
            restart=self._restart,
            iteration=self._iteration,
            generators=list(self._generators),
            current_key=[Ratio(v).to_json() for v in self._current_key],
            rng_state=[version, list(internal), gauss],
            best=self._best.to_json()
        )

    @classmethod
    def restore(
        cls,
        cfg: SearchConfig,
        state: JSONObject
    ) -> 'Annealer':
        annealer = cls(cfg, state['restart'])

        version, internal, gauss = state['rng_state']
        annealer._rng.setstate((version, tuple(internal), gauss))
        annealer._iteration = state['iteration']
        annealer._generators = list(state['generators'])
        annealer._set_current(evaluate(cfg.n, annealer._generators))

        best = SearchRecord.from_json(state['best'])
        annealer._best = best
        annealer._best_key = best.key()
        annealer.history = [(best.iteration, annealer._best_key)]

        return annealer


def _run_restart(
    cfg: SearchConfig,
    restart: int,
    state: Optional[JSONObject]
) -> JSONObject:
    annealer = (
        Annealer(cfg, restart) if state is None
        else Annealer.restore(cfg, state)
    )
    annealer.run()
    return annealer.state()


def _audit(cfg: SearchConfig, record: SearchRecord) -> Optional[str]:
    """Dumps a spanning record with c1 < 1/2 for a human to look at
    """

    if not record.spanning or record.c1 >= HALF:
        return None

    path = os.path.join(
        cfg.audit_dir,
        f'ucf-audit-n{cfg.n}-seed{cfg.seed}-restart{record.restart}.json'
    )

    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(json_stringify(dict(
                config=cfg.to_json(),
                record=record.to_json()
            ), pretty=True))
    except OSError as e:
        logger.error(format_msg(
            'fail to write audit file "%s": %s', path, e))

    warnings.warn(format_msg(
        'search found a spanning union-closed family with c1 = %s < 1/2, '
        'see "%s"',
        record.c1.describe(),
        path
    ), RuntimeWarning)

    return path


async def local_search_async(
    cfg: SearchConfig,
    threads: int = 1,
    resume: Optional[str] = None
) -> SearchRecord:
    """Runs `cfg.restarts` independent restarts and returns the best record.

    Restart r is seeded with `cfg.seed + r`; the best is reduced in restart
    order, so the result does not depend on `threads`. If `resume` names an
    existing checkpoint the restarts continue from it, and the file is
    rewritten when the run ends.
    """

    cfg_json = cfg.to_json()
    states = {}

    if resume is not None and os.path.exists(resume):
        states = load_checkpoint(resume, cfg_json)
        logger.info(format_msg(
            'resuming %s restarts from "%s"', len(states), resume))

    units = [
        (cfg, restart, states.get(restart))
        for restart in range(cfg.restarts)
    ]

    if threads <= 1 or len(units) == 1:
        results = [_run_restart(*unit) for unit in units]
    else:
        loop = asyncio.get_running_loop()

        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = await asyncio.gather(*[
                loop.run_in_executor(pool, _run_restart, *unit)
                for unit in units
            ])

    best = None

    for state in results:
        record = SearchRecord.from_json(state['best'])

        if best is None or record.key() < best.key():
            best = record

    if resume is not None:
        save_checkpoint(resume, cfg_json, list(results))

    _audit(cfg, best)

    return best


def local_search(
    cfg: SearchConfig,
    threads: int = 1,
    resume: Optional[str] = None
) -> SearchRecord:
    return asyncio.run(local_search_async(cfg, threads, resume))
