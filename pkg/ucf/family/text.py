"""The family text format.

One member per line, elements separated by spaces or commas, `-` for the
empty set, `#` starts a comment line and an optional `n=<int>` header fixes
the ground size::

    n=3
    # two singletons and their union
    1
    2
    1 2
"""

import re
from typing import (
    Iterator,
    List,
    Optional,
    Tuple
)

from ucf.common.constants import (
    MAX_GROUND_SIZE,
    EMPTY_SET_TOKEN,
    COMMENT_PREFIX,
    HEADER_PREFIX
)
from ucf.common.exceptions import (
    FamilyParseException,
    InvalidGroundSetException,
    ElementOutOfRangeException
)
from ucf.common.utils import (
    iter_elements,
    mask_of
)

from .family import SetFamily


SEPARATOR = re.compile(r'[\s,]+')

# (line number, mask, largest element)
ParsedLine = Tuple[int, int, int]


def _parse_header(lineno: int, line: str) -> int:
    value = line[len(HEADER_PREFIX):].strip()

    try:
        n = int(value)
    except ValueError:
        raise FamilyParseException(
            lineno, f'invalid ground size "{value}"')

    if not 1 <= n <= MAX_GROUND_SIZE:
        raise FamilyParseException(
            lineno, f'ground size must be in [1, {MAX_GROUND_SIZE}]')

    return n


def _parse_member(lineno: int, line: str) -> Tuple[int, int]:
    if line == EMPTY_SET_TOKEN:
        return 0, 0

    elements = []
    for token in SEPARATOR.split(line):
        if not token:
            continue

        if not (token.isascii() and token.isdigit()) or int(token) < 1:
            raise FamilyParseException(
                lineno, f'"{token}" is not a positive integer')

        e = int(token)
        if e > MAX_GROUND_SIZE:
            raise FamilyParseException(
                lineno, f'element {e} exceeds {MAX_GROUND_SIZE}')

        if e in elements:
            raise FamilyParseException(
                lineno, f'element {e} is repeated')

        elements.append(e)

    if not elements:
        raise FamilyParseException(
            lineno, f'no element, write "{EMPTY_SET_TOKEN}" for the empty set')

    return mask_of(elements), max(elements)


def _build(
    n: Optional[int],
    header_line: int,
    lines: List[ParsedLine]
) -> SetFamily:
    if not lines:
        raise FamilyParseException(header_line, 'the family has no member')

    largest = max(e for _, _, e in lines)

    if n is None:
        n = max(largest, 1)
    elif largest > n:
        lineno = next(no for no, _, e in lines if e > n)
        raise FamilyParseException(
            lineno, f'element {largest} is outside the ground set of size {n}')

    try:
        return SetFamily(n, [mask for _, mask, _ in lines])
    except (InvalidGroundSetException, ElementOutOfRangeException) as e:
        raise FamilyParseException(header_line, str(e))


def iter_families(text: str) -> Iterator[SetFamily]:
    """Parses a stream of families, every `n=` header starts a new one
    """

    n = None
    header_line = 1
    lines: List[ParsedLine] = []
    seen = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()

        if not line or line.startswith(COMMENT_PREFIX):
            continue

        if line.startswith(HEADER_PREFIX):
            if lines or n is not None:
                yield _build(n, header_line, lines)

            n = _parse_header(lineno, line)
            header_line = lineno
            lines = []
            seen = {}
            continue

        mask, largest = _parse_member(lineno, line)

        if mask in seen:
            raise FamilyParseException(
                lineno, f'duplicate of line {seen[mask]}')

        seen[mask] = lineno
        lines.append((lineno, mask, largest))

    if lines or n is not None:
        yield _build(n, header_line, lines)


def parse_family(text: str) -> SetFamily:
    families = list(iter_families(text))

    if not families:
        raise FamilyParseException(1, 'no family found')

    if len(families) > 1:
        raise FamilyParseException(
            1, f'expected one family, but found {len(families)}')

    return families[0]


def parse_families(text: str) -> List[SetFamily]:
    return list(iter_families(text))


def parse_inline(inline: str) -> SetFamily:
    """`1;2;1 2` style shorthand, semicolons separate members
    """

    return parse_family('\n'.join(inline.split(';')))


def read_family(path: str) -> SetFamily:
    with open(path, encoding='utf-8') as f:
        return parse_family(f.read())


def format_member(mask: int) -> str:
    if not mask:
        return EMPTY_SET_TOKEN

    return ' '.join(str(e) for e in iter_elements(mask))


def format_family(family: SetFamily) -> str:
    lines = [f'{HEADER_PREFIX}{family.n}']
    lines.extend(format_member(mask) for mask in family.masks)
    return '\n'.join(lines) + '\n'


def format_families(families) -> str:
    return ''.join(format_family(f) for f in families)
