import itertools
from typing import (
    Iterable,
    List,
    Set,
    Tuple
)

from ucf.family import SetFamily


def fam(n: int, *sets: Iterable[int]) -> SetFamily:
    """fam(3, [1], [2], [1, 2])
    """

    return SetFamily.of(n, sets)


def as_sets(family: SetFamily) -> Set[frozenset]:
    return {frozenset(member) for member in family}


# -------------------------------------------------
# Brute-force oracles, written against the definitions only

def oracle_is_closed(sets: Iterable[frozenset]) -> bool:
    sets = set(sets)
    return all(a | b in sets for a in sets for b in sets)


def oracle_closure(sets: Iterable[frozenset]) -> Set[frozenset]:
    closure = set(sets)

    while True:
        grown = closure | {a | b for a in closure for b in closure}
        if grown == closure:
            return closure
        closure = grown


def oracle_counts(n: int, sets: Iterable[frozenset]) -> List[int]:
    sets = list(sets)
    return [sum(1 for s in sets if e in s) for e in range(1, n + 1)]


def oracle_delete(sets: Iterable[frozenset], i: int) -> Set[frozenset]:
    return {s - {i} for s in sets}


def power_set(n: int) -> List[frozenset]:
    ground = range(1, n + 1)
    return [
        frozenset(c)
        for k in range(n + 1)
        for c in itertools.combinations(ground, k)
    ]


def oracle_union_closed_families(n: int) -> List[Set[frozenset]]:
    """Every nonempty union-closed family over M_n, by testing all subsets
    of the power set
    """

    subsets = power_set(n)
    found = []

    for k in range(1, len(subsets) + 1):
        for combo in itertools.combinations(subsets, k):
            if oracle_is_closed(combo):
                found.append(set(combo))

    return found


def oracle_quantities(
    sets: Iterable[frozenset],
    i: int,
    j: int
) -> Tuple[int, int, int, int]:
    """(|G_j|, |G_/j|, x, y) straight from the definitions
    """

    sets = set(sets)
    g = oracle_delete(sets, i)
    g_j = sum(1 for s in g if j in s)
    x = sum(1 for a in sets if i not in a and j in a and a | {i} in sets)
    y = sum(1 for a in sets if i not in a and j not in a and a | {i} in sets)
    return g_j, len(g) - g_j, x, y
