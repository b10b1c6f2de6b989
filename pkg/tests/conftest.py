"""Shared brute-force oracles, kept independent of the library internals.

Everything here walks ``itertools.permutations`` directly and recomputes
statistics straight from the definitions, so the tests compare the
library's streaming enumeration and closed forms against a second,
structurally different computation.
"""
from __future__ import annotations

from itertools import permutations as raw_permutations

from cyclestat.permutations import Permutation


def all_perms(n: int):
    """Every permutation of [n] as a Permutation, in lexicographic order."""
    return (Permutation(word) for word in raw_permutations(range(1, n + 1)))


def oracle_des(word: tuple[int, ...]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def oracle_exc(word: tuple[int, ...]) -> int:
    return sum(1 for i, a in enumerate(word, start=1) if i < a)


def oracle_cval(word: tuple[int, ...]) -> int:
    n = len(word)
    inv = [0] * (n + 1)
    for pos, letter in enumerate(word, start=1):
        inv[letter] = pos
    return sum(1 for i in range(1, n + 1) if inv[i] > i < word[i - 1])


def oracle_fix(word: tuple[int, ...]) -> int:
    return sum(1 for i, a in enumerate(word, start=1) if i == a)


def oracle_cycle_sizes(word: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle sizes via destructive dict walking (independent of the library)."""
    edges = {i: a for i, a in enumerate(word, start=1)}
    sizes = []
    while edges:
        start, nxt = edges.popitem()
        size = 1
        while nxt != start:
            nxt = edges.pop(nxt)
            size += 1
        sizes.append(size)
    return tuple(sorted(sizes))
