"""Conjugacy classes of S_n and brute-force distribution polynomials.

The conjugacy class with cycle type lambda has n!/z_lambda members, where
z_lambda = prod_i i^(m_i) m_i! is the centralizer order. Members are
generated directly from cycle structure with a canonical-anchor rule --
the smallest unused element always opens the next cycle, and that cycle's
size is chosen from the remaining distinct part sizes -- so each member
appears exactly once with no seen-set.

Distribution polynomials are computed by folding statistics over the
stream without materializing it. The fold exploits that every letter's
classification (excedance / cyclic valley / ...) only compares it with
its neighbours inside its own cycle, so a completed cycle's contribution
is added once and shared by the whole subtree of completions.

Sets specified by a fixed-point count k (optionally also by a cyclic
valley count i) are unions of the conjugacy classes with m_1 = k, and are
enumerated that way.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterator

from .algebra import MultiPoly
from .permutations import CycleType, Permutation, _word_from_cycles

__all__ = [
    "DEFAULT_CLASS_CAP",
    "ClassTooLargeError",
    "ClassSpec",
    "partitions_of",
    "z_lambda",
    "class_size",
    "iter_class",
    "dist_exc",
    "dist_cval",
    "dist_joint",
    "count_snki",
]

DEFAULT_CLASS_CAP = 10**8


class ClassTooLargeError(RuntimeError):
    """Enumeration refused: the class exceeds the configured member cap."""


def _partition_lists(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_lists(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> tuple[CycleType, ...]:
    """All partitions of n, in decreasing lexicographic order of their
    decreasing part-lists: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).

    >>> [str(ct) for ct in partitions_of(4)]
    ['(4)', '(1,3)', '(2,2)', '(1,1,2)', '(1,1,1,1)']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(CycleType(parts) for parts in _partition_lists(n, n))


def z_lambda(ct: CycleType) -> int:
    """Centralizer order: prod_i i^(m_i) * m_i!.

    >>> z_lambda(CycleType((1, 5, 5)))
    50
    """
    result = 1
    for size, mult in ct.multiplicities.items():
        result *= size**mult * factorial(mult)
    return result


def class_size(ct: CycleType) -> int:
    """Number of permutations with the given cycle type: n!/z_lambda.

    >>> class_size(CycleType((1, 5, 5)))
    798336
    """
    return factorial(ct.n) // z_lambda(ct)


@dataclass(frozen=True)
class ClassSpec:
    """A hop-invariant family of permutations to enumerate.

    Exactly one shape applies:

    * a single conjugacy class (``cycle_type`` set),
    * all permutations of length n with k fixed points, or
    * the previous further restricted to i cyclic valleys.
    """

    n: int
    cycle_type: CycleType | None = None
    fixed_points: int | None = None
    cval: int | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.cycle_type is not None:
            if self.fixed_points is not None or self.cval is not None:
                raise ValueError("cycle_type excludes the other parameters")
            if self.cycle_type.n != self.n:
                raise ValueError(
                    f"cycle type {self.cycle_type} is not a partition of {self.n}"
                )
            return
        k = self.fixed_points
        if k is None:
            raise ValueError("need a cycle type or a fixed-point count")
        if not 0 <= k <= self.n:
            raise ValueError(f"fixed-point count {k} out of range [0, {self.n}]")
        if self.cval is not None and not 0 <= self.cval <= (self.n - k) // 2:
            raise ValueError(
                f"cyclic valley count {self.cval} out of range "
                f"[0, {(self.n - k) // 2}]"
            )

    # -- constructors -------------------------------------------------

    @classmethod
    def of_cycle_type(cls, ct: CycleType) -> "ClassSpec":
        return cls(n=ct.n, cycle_type=ct)

    @classmethod
    def with_fixed_points(cls, n: int, k: int) -> "ClassSpec":
        return cls(n=n, fixed_points=k)

    @classmethod
    def with_fixed_points_and_valleys(cls, n: int, k: int, i: int) -> "ClassSpec":
        return cls(n=n, fixed_points=k, cval=i)

    @classmethod
    def parse(cls, text: str) -> "ClassSpec":
        """Parse "1,5,5", "1^1 5^2", "n=5,k=2", or "n=5,k=2,i=1"."""
        text = text.strip()
        if "=" in text:
            fields = {}
            for chunk in text.split(","):
                key, _, value = chunk.partition("=")
                fields[key.strip()] = int(value)
            unknown = set(fields) - {"n", "k", "i"}
            if unknown or "n" not in fields or "k" not in fields:
                raise ValueError(f"expected n=..,k=..[,i=..], got {text!r}")
            if "i" in fields:
                return cls.with_fixed_points_and_valleys(
                    fields["n"], fields["k"], fields["i"]
                )
            return cls.with_fixed_points(fields["n"], fields["k"])
        return cls.of_cycle_type(CycleType.from_text(text))

    # -- structure ----------------------------------------------------

    @property
    def fixed_point_count(self) -> int:
        """k: every member has exactly this many fixed points."""
        if self.cycle_type is not None:
            return self.cycle_type.fixed_point_count
        assert self.fixed_points is not None
        return self.fixed_points

    def cycle_types(self) -> tuple[CycleType, ...]:
        """The conjugacy classes whose union this spec denotes."""
        if self.cycle_type is not None:
            return (self.cycle_type,)
        return tuple(
            ct
            for ct in partitions_of(self.n)
            if ct.fixed_point_count == self.fixed_points
        )

    def member_bound(self) -> int:
        """Total size of the covered classes (an upper bound for cval specs)."""
        return sum(class_size(ct) for ct in self.cycle_types())

    def instance(self) -> dict:
        """Parameter record for reports."""
        if self.cycle_type is not None:
            return {"lambda": list(self.cycle_type.parts)}
        if self.cval is None:
            return {"n": self.n, "k": self.fixed_points}
        return {"n": self.n, "k": self.fixed_points, "i": self.cval}

    def __str__(self) -> str:
        if self.cycle_type is not None:
            return str(self.cycle_type)
        if self.cval is None:
            return f"n={self.n},k={self.fixed_points}"
        return f"n={self.n},k={self.fixed_points},i={self.cval}"


def _check_cap(spec: ClassSpec, cap: int | None) -> None:
    cap = DEFAULT_CLASS_CAP if cap is None else cap
    bound = spec.member_bound()
    if bound > cap:
        raise ClassTooLargeError(
            f"{spec} has {bound} members, above the cap of {cap}"
        )


def _iter_cycle_lists(
    avail: tuple[int, ...], sizes: tuple[int, ...]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ways to arrange ``avail`` into cycles of the given sizes.

    The smallest available element anchors the next cycle; its size is
    chosen among the distinct remaining sizes, so equal-size cycles come
    out ordered by anchor and nothing repeats.
    """
    if not avail:
        yield ()
        return
    anchor, rest = avail[0], avail[1:]
    chosen = set()
    for idx, size in enumerate(sizes):
        if size in chosen:
            continue
        chosen.add(size)
        remaining_sizes = sizes[:idx] + sizes[idx + 1 :]
        if size == 1:
            for tail in _iter_cycle_lists(rest, remaining_sizes):
                yield ((anchor,),) + tail
            continue
        for others in combinations(rest, size - 1):
            others_set = set(others)
            remaining = tuple(e for e in rest if e not in others_set)
            for arrangement in permutations(others):
                head = (anchor,) + arrangement
                for tail in _iter_cycle_lists(remaining, remaining_sizes):
                    yield (head,) + tail


def _cycle_joint_stats(anchor: int, arrangement: tuple[int, ...]) -> tuple[int, int]:
    """(cval, exc) contributed by the cycle (anchor, *arrangement).

    The anchor is the cycle minimum, so it is always a cyclic valley
    whenever the cycle has size >= 2.
    """
    cycle = (anchor,) + arrangement
    size = len(cycle)
    cval = 0
    exc = 0
    for j in range(size):
        elem = cycle[j]
        nxt = cycle[j + 1] if j + 1 < size else cycle[0]
        if elem < nxt:
            exc += 1
            if cycle[j - 1] > elem:
                cval += 1
    return cval, exc


def _fold_joint(
    avail: tuple[int, ...],
    sizes: tuple[int, ...],
    cval_acc: int,
    exc_acc: int,
    counts: dict[tuple[int, int], int],
) -> None:
    if not avail:
        key = (cval_acc, exc_acc)
        counts[key] = counts.get(key, 0) + 1
        return
    anchor, rest = avail[0], avail[1:]
    chosen = set()
    for idx, size in enumerate(sizes):
        if size in chosen:
            continue
        chosen.add(size)
        remaining_sizes = sizes[:idx] + sizes[idx + 1 :]
        if size == 1:
            _fold_joint(rest, remaining_sizes, cval_acc, exc_acc, counts)
            continue
        for others in combinations(rest, size - 1):
            others_set = set(others)
            remaining = tuple(e for e in rest if e not in others_set)
            for arrangement in permutations(others):
                cval, exc = _cycle_joint_stats(anchor, arrangement)
                _fold_joint(
                    remaining,
                    remaining_sizes,
                    cval_acc + cval,
                    exc_acc + exc,
                    counts,
                )


@lru_cache(maxsize=None)
def _joint_counts(ct: CycleType) -> dict[tuple[int, int], int]:
    """Map (cval, exc) -> member count over the class with cycle type ct."""
    counts: dict[tuple[int, int], int] = {}
    _fold_joint(tuple(range(1, ct.n + 1)), ct.parts, 0, 0, counts)
    return counts


def iter_class(spec: ClassSpec, cap: int | None = None) -> Iterator[Permutation]:
    """Stream every member of the spec exactly once.

    Raises :class:`ClassTooLargeError` before yielding anything when the
    covered classes hold more than ``cap`` members (default 10^8).

    >>> sorted(str(p) for p in iter_class(ClassSpec.parse("3")))
    ['231', '312']
    """
    _check_cap(spec, cap)
    want_cval = spec.cval
    for ct in spec.cycle_types():
        n = ct.n
        for cycles in _iter_cycle_lists(tuple(range(1, n + 1)), ct.parts):
            if want_cval is not None:
                cval = sum(
                    _cycle_joint_stats(c[0], c[1:])[0] for c in cycles if len(c) > 1
                )
                if cval != want_cval:
                    continue
            yield Permutation(_word_from_cycles(cycles, n))


def _combined_counts(
    spec: ClassSpec, cap: int | None
) -> dict[tuple[int, int], int]:
    _check_cap(spec, cap)
    combined: dict[tuple[int, int], int] = {}
    for ct in spec.cycle_types():
        for key, count in _joint_counts(ct).items():
            combined[key] = combined.get(key, 0) + count
    if spec.cval is not None:
        combined = {
            key: count for key, count in combined.items() if key[0] == spec.cval
        }
    return combined


def dist_joint(spec: ClassSpec, cap: int | None = None) -> MultiPoly:
    """Sum of s^cval t^exc over the members of the spec, by enumeration.

    >>> str(dist_joint(ClassSpec.parse("3")))
    's*t + s*t^2'
    """
    return MultiPoly(
        {key: count for key, count in _combined_counts(spec, cap).items()}
    )


def dist_exc(spec: ClassSpec, cap: int | None = None) -> MultiPoly:
    """Sum of t^exc over the members of the spec, by enumeration."""
    terms: dict[tuple[int, int], int] = {}
    for (_, exc), count in _combined_counts(spec, cap).items():
        key = (0, exc)
        terms[key] = terms.get(key, 0) + count
    return MultiPoly(terms)


def dist_cval(spec: ClassSpec, cap: int | None = None) -> MultiPoly:
    """Sum of t^cval over the members of the spec, by enumeration."""
    terms: dict[tuple[int, int], int] = {}
    for (cval, _), count in _combined_counts(spec, cap).items():
        key = (0, cval)
        terms[key] = terms.get(key, 0) + count
    return MultiPoly(terms)


def count_snki(n: int, k: int, i: int, cap: int | None = None) -> int:
    """Number of permutations of length n with k fixed points and i cyclic
    valleys, by enumeration.

    >>> count_snki(3, 0, 1), count_snki(3, 1, 1), count_snki(4, 4, 0)
    (2, 3, 1)
    """
    if not 0 <= k <= n:
        raise ValueError(f"fixed-point count {k} out of range [0, {n}]")
    if i < 0 or i > (n - k) // 2:
        return 0
    spec = ClassSpec.with_fixed_points_and_valleys(n, k, i)
    return sum(_combined_counts(spec, cap).values())
