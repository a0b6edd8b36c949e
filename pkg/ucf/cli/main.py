import argparse
import logging
import os
import sys
import time
from typing import (
    List,
    Optional,
    Tuple
)

from ucf.bounds import (
    frankl_check,
    frankl_verified,
    nagel_check,
    nagel_chain,
    s_frankl_check,
    small_set_frankl,
    t2_profile_check,
    proof_quantities,
    lemma1_verify,
    lemma1_bound,
    iterate_lemma1_bound,
    BoundReport
)
from ucf.checks import CHECK_NAMES
from ucf.common.constants import (
    EnumMode,
    Objective,
    ENV_THREADS,
    EXIT_OK,
    EXIT_THEOREM_FAILURE,
    EXIT_USAGE,
    INLINE_OPTION,
    KEY_WALL_TIME,
    DEFAULT_ITERATIONS,
    DEFAULT_RESTARTS,
    DEFAULT_INITIAL_TEMPERATURE,
    DEFAULT_TEMPERATURE_DECAY,
    DEFAULT_AUDIT_DIR
)
from ucf.common.exceptions import (
    UCFException,
    InvalidArgumentException,
    TheoremViolationException
)
from ucf.common.ratio import Ratio
from ucf.common.types import JSONObject
from ucf.common.utils import (
    format_msg,
    json_stringify,
    repr_exception
)
from ucf.enumeration import (
    EnumConfig,
    enumerate_families,
    random_closed_families,
    sweep
)
from ucf.family import (
    SetFamily,
    parse_family,
    parse_inline,
    read_family,
    format_family,
    format_families
)
from ucf.search import (
    SearchConfig,
    local_search,
    verify_record
)


logger = logging.getLogger(__name__)

# (exit code, JSON report, human readable lines)
Result = Tuple[int, JSONObject, List[str]]


def default_threads() -> int:
    value = os.environ.get(ENV_THREADS, '1')

    try:
        threads = int(value)
    except ValueError:
        raise InvalidArgumentException(
            ENV_THREADS, f'integer expected but got `{value}`')

    return max(threads, 1)


def _load_family(args) -> SetFamily:
    if args.inline is not None:
        family = parse_inline(args.inline)
    elif args.file is None:
        raise InvalidArgumentException('FILE', 'a file, `-` or --inline is required')
    elif args.file == '-':
        family = parse_family(sys.stdin.read())
    else:
        family = read_family(args.file)

    # NotUnionClosedException names the pair
    return family.require_union_closed()


def _exit_code(reports: List[BoundReport]) -> int:
    for report in reports:
        if report.fails and report.theorem_backed:
            return EXIT_THEOREM_FAILURE

    return EXIT_OK


def _report_line(report: BoundReport) -> str:
    witnesses = ', '.join(
        f'{w.element}: {w.ratio.describe()}' for w in report.witnesses
    )
    line = f'{report.context}: {report.verdict}, bound {report.bound.describe()}'
    return f'{line}; {witnesses}' if witnesses else line


# -------------------------------------------------
# Commands

def cmd_check(args) -> Result:
    family = _load_family(args)
    profile = family.frequency_profile()

    reports = [
        frankl_check(family),
        nagel_check(family),
        s_frankl_check(family),
        small_set_frankl(family),
        t2_profile_check(family)
    ]

    lines = [
        f'family: {family} ({len(family)} members over M_{family.n})',
        f'T(F): {family.t_value()}',
        'frequencies: ' + ', '.join(
            f'{e}: {profile.ratio(e).describe()}' for e in profile.order
        )
    ]
    lines.extend(_report_line(report) for report in reports)

    return _exit_code(reports), dict(
        family=format_family(family),
        size=len(family),
        t_value=family.t_value(),
        profile=profile.to_json(),
        reports=[report.to_json() for report in reports]
    ), lines


def cmd_lemma(args) -> Result:
    family = _load_family(args)
    pq = proof_quantities(family, args.i, args.j)
    report = lemma1_verify(family, args.i, args.j)

    lines = [
        f'|G_j| = {pq.g_j}, |G_/j| = {pq.g_not_j}, x = {pq.x}, y = {pq.y}',
        f'|F_j| = {pq.f_j}, |F| = {pq.f_total}',
        f'ranges hold: {pq.ranges_hold()}, '
        f'identities hold: {pq.identities_hold()}, '
        f'reduced bound holds: {pq.reduced_bound_holds()}',
        _report_line(report)
    ]

    code = _exit_code([report])
    if not (
        pq.ranges_hold() and pq.identities_hold()
        and pq.reduced_bound_holds()
    ):
        code = EXIT_THEOREM_FAILURE

    return code, dict(
        quantities=pq.to_json(),
        report=report.to_json()
    ), lines


def cmd_chain(args) -> Result:
    family = _load_family(args)
    steps = nagel_chain(family)

    lines = ['k  element  achieved  bound']
    lines.extend(
        f'{s.k}  {s.element}  {s.achieved.describe()}  '
        f'{s.bound.describe()}'
        + ('' if s.holds else '  FAILS')
        for s in steps
    )

    # every step leans on Frankl's conjecture for a quotient of the family
    proven = frankl_verified(family)
    failing = not all(s.holds for s in steps)

    code = EXIT_THEOREM_FAILURE if failing and proven else EXIT_OK
    return code, dict(
        steps=[s.to_json() for s in steps],
        proven=proven
    ), lines


def cmd_bound(args) -> Result:
    c = Ratio.of(args.c)

    if args.iterate is None:
        values = [lemma1_bound(c)]
    elif args.iterate < 0:
        raise InvalidArgumentException(
            '--iterate', f'non-negative integer expected but got {args.iterate}')
    else:
        values = iterate_lemma1_bound(c, args.iterate)

    lines = [
        f'{k}: {value.describe()}' for k, value in enumerate(values, 1)
    ]

    return EXIT_OK, dict(
        c=c.to_json(),
        values=[value.to_json() for value in values]
    ), lines


def _enum_config(args) -> EnumConfig:
    return EnumConfig(
        n=args.n,
        spanning=args.spanning,
        allow_empty_member=args.allow_empty,
        exclude_trivial=args.exclude_trivial,
        mode=EnumMode(args.mode),
        limit=args.limit
    )


def cmd_enumerate(args) -> Result:
    if args.random is not None:
        if args.generators is None:
            raise InvalidArgumentException(
                '--generators', 'is required together with --random')

        families = list(random_closed_families(
            args.n, args.random, args.generators, args.seed))
        config = dict(
            n=args.n,
            random=args.random,
            generators=args.generators,
            seed=args.seed
        )
    else:
        cfg = _enum_config(args)
        families = list(enumerate_families(cfg))
        config = cfg.to_json()

    text = format_families(families)

    return EXIT_OK, dict(
        config=config,
        count=len(families),
        families=text
    ), [text.rstrip('\n'), f'# {len(families)} families']


def cmd_sweep(args) -> Result:
    cfg = _enum_config(args)
    names = args.checks.split(',') if args.checks else CHECK_NAMES
    report = sweep(cfg, names, args.threads)

    lines = [f'families: {report.families_seen}']

    for check in report.checks:
        tally = report.tally(check.NAME)
        lines.append(
            f'{check.NAME} ({check.status}): holds {tally.holds}, '
            f'fails {tally.fails}, not applicable {tally.not_applicable}'
        )

    lines.append(f'theorem-backed failures: {report.theorem_failures}')

    code = EXIT_THEOREM_FAILURE if report.theorem_failures else EXIT_OK
    return code, report.to_json(), lines


def cmd_search(args) -> Result:
    initial = None

    if args.inline is not None:
        initial = tuple(parse_inline(args.inline).masks)

    cfg = SearchConfig(
        n=args.n,
        objective=Objective(args.objective),
        iterations=args.iters,
        seed=args.seed,
        restarts=args.restarts,
        initial_temperature=args.temperature,
        decay=args.decay,
        initial_generators=initial,
        audit_dir=args.audit_dir
    )

    started = time.monotonic()
    record = local_search(cfg, args.threads, args.resume)
    verified = verify_record(record)

    obj = record.to_json()
    obj['config'] = cfg.to_json()
    obj['verified'] = verified
    obj[KEY_WALL_TIME] = int((time.monotonic() - started) * 1000)

    lines = [
        f'c1: {record.c1.describe()}',
        f'c2: {record.c2.describe()}',
        f'found at iteration {record.iteration} of restart {record.restart}, '
        f'{len(record.family)} members, spanning: {record.spanning}',
        f'verified: {verified}'
    ]

    code = EXIT_OK if verified else EXIT_THEOREM_FAILURE
    return code, obj, lines


# -------------------------------------------------
# Parser

def _add_family_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        'file', nargs='?', metavar='FILE',
        help='family text file, `-` for stdin')
    parser.add_argument(
        INLINE_OPTION, metavar='SETS',
        help='members separated by semicolons, `-` for ∅, e.g. "-;1;2;1 2"')


def _add_enum_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('-n', '--n', type=int, required=True)
    parser.add_argument(
        '--spanning', action='store_true',
        help='only families whose members cover M_n')
    parser.add_argument(
        '--allow-empty', dest='allow_empty', action='store_true',
        default=True, help='include families containing ∅ (default)')
    parser.add_argument(
        '--no-empty', dest='allow_empty', action='store_false',
        help='exclude families containing ∅')
    parser.add_argument('--exclude-trivial', action='store_true')
    parser.add_argument(
        '--mode', choices=[str(m) for m in EnumMode],
        default=str(EnumMode.DENSE))
    parser.add_argument('--limit', type=int)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-v', '--verbose', action='store_true', help='log progress')
    common.add_argument(
        '-q', '--quiet', action='store_true', help='log warnings only')
    common.add_argument(
        '--out', metavar='PATH',
        help='write the JSON report to PATH, `-` for stdout')

    parser = argparse.ArgumentParser(
        prog='ucf',
        description='Exact checks, enumeration and search for '
                    'union-closed families'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=help)

    check = add('check', 'profile and conjecture checks')
    _add_family_input(check)
    check.set_defaults(handler=cmd_check)

    lemma = add('lemma', 'deletion lemma quantities')
    _add_family_input(lemma)
    lemma.add_argument('--i', type=int, required=True)
    lemma.add_argument('--j', type=int, required=True)
    lemma.set_defaults(handler=cmd_lemma)

    chain = add('chain', 'greedy deletion chain')
    _add_family_input(chain)
    chain.set_defaults(handler=cmd_chain)

    bound = add('bound', 'evaluate c / (2 - c)')
    bound.add_argument('--c', required=True, metavar='NUM/DEN')
    bound.add_argument('--iterate', type=int, metavar='K')
    bound.set_defaults(handler=cmd_bound)

    enumerate_ = add(
        'enumerate', 'list union-closed families')
    _add_enum_options(enumerate_)
    enumerate_.add_argument(
        '--random', type=int, metavar='COUNT',
        help='sample COUNT random closures instead')
    enumerate_.add_argument('--generators', type=int, metavar='K')
    enumerate_.add_argument('--seed', type=int, default=0)
    enumerate_.set_defaults(handler=cmd_enumerate)

    threads = default_threads()

    sweep_ = add(
        'sweep', 'run checks over every enumerated family')
    _add_enum_options(sweep_)
    sweep_.add_argument(
        '--checks', metavar='NAMES',
        help='comma separated, one of ' + ','.join(CHECK_NAMES))
    sweep_.add_argument('--threads', type=int, default=threads)
    sweep_.set_defaults(handler=cmd_sweep)

    search = add(
        'search', 'simulated annealing for small c1, c2')
    search.add_argument('-n', '--n', type=int, required=True)
    search.add_argument(
        '--objective', choices=[str(o) for o in Objective],
        default=str(Objective.MIN_C1))
    search.add_argument('--iters', type=int, default=DEFAULT_ITERATIONS)
    search.add_argument('--seed', type=int, default=0)
    search.add_argument('--restarts', type=int, default=DEFAULT_RESTARTS)
    search.add_argument(
        '--temperature', type=float, default=DEFAULT_INITIAL_TEMPERATURE)
    search.add_argument(
        '--decay', type=float, default=DEFAULT_TEMPERATURE_DECAY)
    search.add_argument(
        INLINE_OPTION, metavar='SETS', help='initial generators')
    search.add_argument('--threads', type=int, default=threads)
    search.add_argument('--resume', metavar='PATH')
    search.add_argument('--audit-dir', default=DEFAULT_AUDIT_DIR)
    search.set_defaults(handler=cmd_search)

    return parser


def _setup_logging(args) -> None:
    level = logging.WARNING

    if args.verbose and not args.quiet:
        level = logging.INFO

    logging.basicConfig(
        level=level,
        format='%(levelname)s %(name)s: %(message)s'
    )


def join_inline(argv: List[str]) -> List[str]:
    """Rewrites `--inline SETS` as `--inline=SETS`, so that SETS may start
    with the empty member `-` without being parsed as an option
    """

    joined = []
    args = iter(argv)

    for arg in args:
        value = next(args, None) if arg == INLINE_OPTION else None
        joined.append(arg if value is None else f'{arg}={value}')

    return joined


def main(argv: Optional[List[str]] = None) -> int:
    try:
        parser = build_parser()
    except UCFException as e:
        print(repr_exception(e), file=sys.stderr)
        return EXIT_USAGE

    args = parser.parse_args(
        join_inline(sys.argv[1:] if argv is None else argv))
    _setup_logging(args)

    try:
        code, report, lines = args.handler(args)
    except TheoremViolationException as e:
        logger.error(format_msg('theorem-backed check failed: %s', e))
        print(repr_exception(e), file=sys.stderr)
        return EXIT_THEOREM_FAILURE
    except (UCFException, OSError) as e:
        print(repr_exception(e), file=sys.stderr)
        return EXIT_USAGE

    if args.out == '-':
        print(json_stringify(report, pretty=True))
        return code

    print('\n'.join(lines))

    if args.out is not None:
        try:
            with open(args.out, 'w', encoding='utf-8') as f:
                f.write(json_stringify(report, pretty=True))
        except OSError as e:
            print(repr_exception(e), file=sys.stderr)
            return EXIT_USAGE

    return code
