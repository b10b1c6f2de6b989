"""Valley-hopping: commuting involutions that toggle double ascents/descents.

Two group actions are implemented, both products of commuting involutions
indexed by letters x in [n]:

* ``phi`` acts on one-line words. Around each letter x the word factors
  uniquely as w1 w2 x w4 w5 where w2 (w4) is the maximal run of letters
  smaller than x immediately left (right) of x. When x is a double ascent
  or double descent -- judged against virtual boundary letters at both
  ends of the word -- the involution swaps w2 and w4, making x "hop" over
  its smaller neighbours. Peaks and valleys are left alone.

* ``psi`` acts through the word obtained by erasing the parentheses of
  the canonical cycle form (``foata``). The letter hops there, with a
  low boundary on the left and a high boundary on the right, and the
  result is read back into cycle form by cutting at left-to-right maxima
  (``foata_inverse``). Fixed points never move. This toggles cyclic
  double ascents and cyclic double descents while preserving cyclic
  valleys, cyclic peaks, fixed points, and the cycle type.

The orbit of a permutation under ``psi`` has size 2^(n - fix - 2*cval)
and contains exactly one member without cyclic double ascents; ``orbit``
computes all of this by explicit enumeration.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .permutations import (
    Permutation,
    left_to_right_maxima,
    stat_sets,
    _cycles_of_word,
    _word_from_cycles,
)

__all__ = [
    "LOW_BOUNDARY",
    "HIGH_BOUNDARY",
    "XFactorization",
    "x_factorize",
    "foata",
    "foata_inverse",
    "phi",
    "psi",
    "OrbitReport",
    "orbit",
    "orbit_exc_polynomial",
]

# Virtual boundary letters: LOW compares below every letter, HIGH above.
LOW_BOUNDARY: float = 0.0
HIGH_BOUNDARY: float = math.inf


@dataclass(frozen=True)
class XFactorization:
    """The factorization w1 w2 x w4 w5 of a word around the letter x.

    w2 and w4 are the maximal runs of letters smaller than x immediately
    adjacent to x. The boundaries are the virtual letters imagined just
    outside the word; they decide how x is classified when it sits at an
    end of the word.
    """

    w1: tuple[int, ...]
    w2: tuple[int, ...]
    x: int
    w4: tuple[int, ...]
    w5: tuple[int, ...]
    left_boundary: float = HIGH_BOUNDARY
    right_boundary: float = HIGH_BOUNDARY

    @property
    def left_is_smaller(self) -> bool:
        """Is the (possibly virtual) letter immediately left of x below x?"""
        if self.w2:
            return True
        if self.w1:
            return False
        return self.left_boundary < self.x

    @property
    def right_is_smaller(self) -> bool:
        if self.w4:
            return True
        if self.w5:
            return False
        return self.right_boundary < self.x

    @property
    def kind(self) -> str:
        """One of "double_ascent", "double_descent", "peak", "valley"."""
        left, right = self.left_is_smaller, self.right_is_smaller
        if left and right:
            return "peak"
        if left:
            return "double_ascent"
        if right:
            return "double_descent"
        return "valley"

    @property
    def hops(self) -> bool:
        return self.kind in ("double_ascent", "double_descent")

    def hopped(self) -> tuple[int, ...]:
        """The word w1 w4 x w2 w5 (w2 and w4 exchanged)."""
        return self.w1 + self.w4 + (self.x,) + self.w2 + self.w5


def x_factorize(
    word: tuple[int, ...] | list[int],
    x: int,
    left_boundary: float = HIGH_BOUNDARY,
    right_boundary: float = HIGH_BOUNDARY,
) -> XFactorization:
    """Factor ``word`` as w1 w2 x w4 w5 around the letter x.

    >>> f = x_factorize((8, 3, 4, 2, 7, 9, 1, 5, 6), 7)
    >>> f.w1, f.w2, f.w4, f.w5
    ((8,), (3, 4, 2), (), (9, 1, 5, 6))
    """
    word = tuple(word)
    try:
        pos = word.index(x)
    except ValueError:
        raise ValueError(f"letter {x} does not occur in the word") from None
    lo = pos
    while lo > 0 and word[lo - 1] < x:
        lo -= 1
    hi = pos + 1
    while hi < len(word) and word[hi] < x:
        hi += 1
    return XFactorization(
        w1=word[:lo],
        w2=word[lo:pos],
        x=x,
        w4=word[pos + 1 : hi],
        w5=word[hi:],
        left_boundary=left_boundary,
        right_boundary=right_boundary,
    )


def _hop(word: tuple[int, ...], x: int, left: float, right: float) -> tuple[int, ...]:
    f = x_factorize(word, x, left, right)
    return f.hopped() if f.hops else word


def foata(p: Permutation) -> Permutation:
    """Erase the parentheses of the canonical cycle form.

    >>> str(foata(Permutation((6, 4, 9, 2, 3, 7, 1, 8, 5))))
    '427168953'
    """
    word = tuple(a for cycle in _cycles_of_word(p.word) for a in cycle)
    return Permutation(word)


def foata_inverse(p: Permutation) -> Permutation:
    """Recover the cycles by cutting the word before each left-to-right maximum.

    Inverse of :func:`foata`: ``foata_inverse(foata(p)) == p``.
    """
    word = p.word
    cuts = sorted(left_to_right_maxima(word))
    cycles = [
        word[start - 1 : (cuts[j + 1] - 1 if j + 1 < len(cuts) else len(word))]
        for j, start in enumerate(cuts)
    ]
    return Permutation(_word_from_cycles(cycles, len(word)))


def _check_letters(letters, n: int) -> list[int]:
    out = sorted(set(letters))
    if out and (out[0] < 1 or out[-1] > n):
        raise ValueError(f"letters {out} not contained in [1, {n}]")
    return out


def phi(p: Permutation, letters) -> Permutation:
    """Apply the word-level hop involution for every letter in ``letters``.

    The involutions commute, so the set alone determines the result.

    >>> str(phi(Permutation((8, 3, 4, 2, 7, 9, 1, 5, 6)), {6, 7, 8}))
    '734289615'
    """
    word = p.word
    for x in _check_letters(letters, p.n):
        word = _hop(word, x, HIGH_BOUNDARY, HIGH_BOUNDARY)
    return Permutation(word)


def psi(p: Permutation, letters) -> Permutation:
    """Apply the cycle-level hop involution for every letter in ``letters``.

    Fixed points of p are left untouched; other letters hop inside the
    parenthesis-erased word with a low left boundary and a high right
    boundary. The output has the same cycle type as p.

    >>> from .permutations import parse_permutation, to_cycle_form
    >>> p = parse_permutation("(5,2,3)(8)(9,7,6,4,1)")
    >>> str(to_cycle_form(psi(p, {3, 7})))
    '(5,3,2)(8)(9,6,4,1,7)'
    """
    fixed = {i for i in range(1, p.n + 1) if p.word[i - 1] == i}
    word = tuple(a for cycle in _cycles_of_word(p.word) for a in cycle)
    for x in _check_letters(letters, p.n):
        if x in fixed:
            continue
        word = _hop(word, x, LOW_BOUNDARY, HIGH_BOUNDARY)
    cuts = sorted(left_to_right_maxima(word))
    cycles = [
        word[start - 1 : (cuts[j + 1] - 1 if j + 1 < len(cuts) else len(word))]
        for j, start in enumerate(cuts)
    ]
    return Permutation(_word_from_cycles(cycles, len(word)))


@dataclass(frozen=True)
class OrbitReport:
    """One orbit of the cycle-level hopping action.

    ``representative`` is the unique member without cyclic double ascents;
    ``members`` is populated only when requested, sorted by word.
    """

    representative: Permutation
    size: int
    cval: int
    fix: int
    members: tuple[Permutation, ...] | None = None


def orbit(p: Permutation, collect_members: bool = False) -> OrbitReport:
    """Enumerate the orbit of p under the cycle-level hopping action.

    Only cyclic double ascents and cyclic double descents can move, so the
    orbit is generated by toggling subsets of those letters; the walk
    below flips one letter at a time (Gray order), costing one hop per
    member.

    >>> rep = orbit(Permutation((2, 3, 1)), collect_members=True)
    >>> rep.size, [str(m) for m in rep.members]
    (2, ['231', '312'])
    """
    sets = stat_sets(p)
    toggles = sorted(sets.cdasc_set | sets.cddes_set)
    members = {p}
    current = p
    for step in range(1, 1 << len(toggles)):
        bit = (step & -step).bit_length() - 1
        current = psi(current, (toggles[bit],))
        members.add(current)
    representative = psi(p, sets.cdasc_set)
    return OrbitReport(
        representative=representative,
        size=len(members),
        cval=len(sets.cval_set),
        fix=len(sets.fix_set),
        members=tuple(sorted(members, key=lambda q: q.word))
        if collect_members
        else None,
    )


def orbit_exc_polynomial(p: Permutation):
    """Sum of t^exc over the orbit of p; equals t^cval (1+t)^(n-fix-2 cval).

    Returned as an exact polynomial in t (a :class:`~cyclestat.algebra.MultiPoly`).
    """
    from .algebra import MultiPoly

    report = orbit(p, collect_members=True)
    total = MultiPoly.zero()
    for member in report.members:
        exc = sum(1 for i, a in enumerate(member.word, start=1) if i < a)
        total = total + MultiPoly.monomial(0, exc)
    return total
