import json
from typing import (
    Iterator,
    List
)

from .constants import MSG_PREFIX


def format_msg(string, *args) -> str:
    return MSG_PREFIX + string % args


def json_stringify(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)

    return json.dumps(obj, separators=(',', ':'), sort_keys=True)


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def iter_elements(mask: int) -> Iterator[int]:
    """Yields the 1-based elements of a bitmask in ascending order
    """

    e = 1
    while mask:
        if mask & 1:
            yield e
        mask >>= 1
        e += 1


def mask_of(elements) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def element_list(mask: int) -> List[int]:
    return list(iter_elements(mask))


def format_mask(mask: int) -> str:
    if not mask:
        return '∅'

    return '{' + ','.join(str(e) for e in iter_elements(mask)) + '}'


def repr_exception(e: Exception) -> str:
    """Better stringify an exception
    """

    s = str(e)
    class_name = type(e).__name__

    return class_name if not s else f'{class_name}: {s}'
