import asyncio
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import (
    dataclass,
    field
)
from typing import (
    Dict,
    Iterable,
    List,
    Sequence,
    Union
)

from ucf.checks import (
    Check,
    resolve_checks
)
from ucf.common.constants import (
    Verdict,
    CheckName,
    EnumMode,
    MAX_FAILING_WITNESSES,
    PARTITIONS_PER_WORKER,
    KEY_WALL_TIME
)
from ucf.common.types import (
    JSONObject,
    Masks
)
from ucf.common.utils import format_msg
from ucf.family import (
    GroundSet,
    SetFamily,
    format_family
)

from .config import EnumConfig
from .dense import (
    candidate_count,
    dense_partitions,
    iter_dense_masks
)
from .generation import enumerate_canonical


logger = logging.getLogger(__name__)

CONVENTIONS = ('with_empty', 'without_empty')


@dataclass
class Tally:
    holds: int = 0
    fails: int = 0
    not_applicable: int = 0

    # failures that contradict a proven result
    theorem_failures: int = 0

    def add(self, verdict: Verdict, theorem_backed: bool = False) -> None:
        if verdict is Verdict.HOLDS:
            self.holds += 1
        elif verdict is Verdict.FAILS:
            self.fails += 1
            self.theorem_failures += int(theorem_backed)
        else:
            self.not_applicable += 1

    def merge(self, other: 'Tally') -> None:
        self.holds += other.holds
        self.fails += other.fails
        self.not_applicable += other.not_applicable
        self.theorem_failures += other.theorem_failures

    def to_json(self) -> JSONObject:
        return dict(
            holds=self.holds,
            fails=self.fails,
            not_applicable=self.not_applicable,
            theorem_failures=self.theorem_failures
        )


def _empty_tallies(names: Sequence[str]) -> Dict[str, Dict[str, Tally]]:
    return {
        name: {convention: Tally() for convention in CONVENTIONS}
        for name in names
    }


@dataclass
class PartitionResult:
    """Tallies of one contiguous slice of the families, kept apart so that
    slices can be merged in a fixed order
    """

    names: List[str]
    families_seen: int = 0
    tallies: Dict[str, Dict[str, Tally]] = field(default_factory=dict)
    failures: List[JSONObject] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.tallies:
            self.tallies = _empty_tallies(self.names)

    def merge(self, other: 'PartitionResult') -> None:
        self.families_seen += other.families_seen

        for name, conventions in other.tallies.items():
            for convention, tally in conventions.items():
                self.tallies[name][convention].merge(tally)

        room = MAX_FAILING_WITNESSES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])


@dataclass
class SweepReport:
    config: EnumConfig
    checks: List[Check]
    result: PartitionResult
    wall_time_ms: int = 0

    @property
    def families_seen(self) -> int:
        return self.result.families_seen

    @property
    def failing_witnesses(self) -> List[JSONObject]:
        return self.result.failures

    def tally(self, name: Union[str, CheckName]) -> Tally:
        total = Tally()
        for tally in self.result.tallies[str(name)].values():
            total.merge(tally)
        return total

    @property
    def theorem_failures(self) -> int:
        """Failures of proven statements, each one a defect
        """

        return sum(
            self.tally(check.NAME).theorem_failures
            for check in self.checks
        )

    def to_json(self) -> JSONObject:
        per_check = {}

        for check in self.checks:
            name = str(check.NAME)
            obj = self.tally(name).to_json()
            obj['status'] = str(check.status)
            obj['by_convention'] = {
                convention: tally.to_json()
                for convention, tally in self.result.tallies[name].items()
            }
            per_check[name] = obj

        return {
            'config': self.config.to_json(),
            'families_seen': self.families_seen,
            'per_check': per_check,
            'theorem_failures': self.theorem_failures,
            'failing_witnesses': self.failing_witnesses,
            KEY_WALL_TIME: self.wall_time_ms
        }


def run_checks(
    n: int,
    names: List[str],
    families: Iterable[Masks]
) -> PartitionResult:
    """Runs the named checks over a stream of union-closed member tuples
    """

    checks = resolve_checks(names)
    ground = GroundSet(n)
    result = PartitionResult(names)

    for masks in families:
        family = SetFamily.from_sorted(ground, masks, True)
        convention = CONVENTIONS[0] if masks[0] == 0 else CONVENTIONS[1]
        result.families_seen += 1
        text = None

        for check in checks:
            name = str(check.NAME)
            tally = result.tallies[name][convention]

            for outcome in check.run(family):
                tally.add(outcome.verdict, outcome.theorem_backed)

                if (
                    outcome.verdict is Verdict.FAILS
                    and len(result.failures) < MAX_FAILING_WITNESSES
                ):
                    if text is None:
                        text = format_family(family)

                    result.failures.append(dict(
                        check=name,
                        family=text,
                        instance=outcome.instance,
                        detail=outcome.detail,
                        theorem_backed=outcome.theorem_backed
                    ))

    return result


def _sweep_dense_range(
    cfg: EnumConfig,
    names: List[str],
    start: int,
    stop: int
) -> PartitionResult:
    families = iter_dense_masks(cfg, start, stop)

    if cfg.limit is not None:
        families = itertools.islice(families, cfg.limit)

    return run_checks(cfg.n, names, families)


def _chunks(items: List[Masks], parts: int) -> List[List[Masks]]:
    step = max(1, -(-len(items) // parts))
    return [items[lo:lo + step] for lo in range(0, len(items), step)]


async def sweep_async(
    cfg: EnumConfig,
    checks: Iterable[Union[str, CheckName]],
    threads: int = 1
) -> SweepReport:
    """Runs `checks` over every family `cfg` enumerates.

    With `threads > 1` the work is split into contiguous slices that run in
    a process pool; slices are merged in their fixed order, so the report
    does not depend on the number of workers. A `limit` forces a single
    slice.
    """

    resolved = resolve_checks(checks)
    names = [str(check.NAME) for check in resolved]
    started = time.monotonic()

    logger.info(format_msg(
        'sweep n=%s mode=%s checks=%s threads=%s',
        cfg.n, cfg.mode, ','.join(names), threads
    ))

    if cfg.mode is EnumMode.DENSE:
        if threads <= 1 or cfg.limit is not None:
            units = [(cfg, names, 0, candidate_count(cfg.n))]
        else:
            units = [
                (cfg, names, lo, hi)
                for lo, hi in dense_partitions(
                    cfg, threads * PARTITIONS_PER_WORKER)
            ]
        worker = _sweep_dense_range
    else:
        families = [f.masks for f in enumerate_canonical(cfg)]
        units = [
            (cfg.n, names, chunk)
            for chunk in _chunks(families, max(threads, 1))
        ] or [(cfg.n, names, [])]
        worker = run_checks

    if threads <= 1 or len(units) == 1:
        results = [worker(*unit) for unit in units]
    else:
        loop = asyncio.get_running_loop()

        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = await asyncio.gather(*[
                loop.run_in_executor(pool, worker, *unit)
                for unit in units
            ])

    merged = PartitionResult(names)
    for result in results:
        merged.merge(result)

    report = SweepReport(
        config=cfg,
        checks=resolved,
        result=merged,
        wall_time_ms=int((time.monotonic() - started) * 1000)
    )

    logger.info(format_msg(
        'sweep finished, %s families, %s theorem-backed failures',
        report.families_seen, report.theorem_failures
    ))

    return report


def sweep(
    cfg: EnumConfig,
    checks: Iterable[Union[str, CheckName]],
    threads: int = 1
) -> SweepReport:
    return asyncio.run(sweep_async(cfg, checks, threads))
