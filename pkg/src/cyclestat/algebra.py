"""Exact polynomial and truncated power-series arithmetic over the rationals.

Everything here is exact: coefficients are ``fractions.Fraction`` values,
equality is true equality, and no floating point is ever involved.

``MultiPoly`` is a sparse polynomial in the two variables s and t, keyed
by exponent pairs (deg_s, deg_t). Univariate polynomials in t are simply
the members with no s. ``TruncSeries`` is the quotient of that ring by
total degree: all terms with deg_s + deg_t > order are discarded, which
makes units invertible and series with constant term 1 admit square
roots. It exists to evaluate substitution formulas whose closed forms
contain radicals; whenever the represented function is actually a
polynomial, ``to_poly`` recovers it and loudly rejects leftover
high-order terms (the sign of a too-small truncation order).

``eulerian(n)`` is the classic descent-counting polynomial, normalized so
that the lowest term is t^1 for n >= 1 (and 1 for n = 0); it is computed
from the standard triangle recurrence. ``gamma_expand`` rewrites a
polynomial that is symmetric about m/2 in the basis t^i (1+t)^(m-2i).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

__all__ = [
    "MultiPoly",
    "TruncSeries",
    "GammaExpansion",
    "GammaExpansionError",
    "TruncationResidueError",
    "eulerian",
    "gamma_expand",
    "poly_at_series",
]

Exponents = tuple[int, int]
Scalar = int | Fraction


class TruncationResidueError(ValueError):
    """A series expected to be a polynomial has nonzero high-order terms."""


class GammaExpansionError(ValueError):
    """The polynomial is not symmetric about the requested center."""

    def __init__(self, message: str, residual: "MultiPoly"):
        super().__init__(message)
        self.residual = residual


def _clean(terms: Mapping[Exponents, Scalar]) -> dict[Exponents, Fraction]:
    out = {}
    for key, value in terms.items():
        value = Fraction(value)
        if value:
            out[key] = value
    return out


class MultiPoly:
    """Sparse exact polynomial in s and t.

    >>> p = (MultiPoly.one() + MultiPoly.t()) ** 2
    >>> str(p)
    '1 + 2*t + t^2'
    >>> p.evaluate(0, 1)
    Fraction(4, 1)
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, Scalar] | None = None):
        self._terms = _clean(terms or {})

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: Scalar) -> "MultiPoly":
        return cls({(0, 0): c})

    @classmethod
    def s(cls) -> "MultiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "MultiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, deg_s: int, deg_t: int, coeff: Scalar = 1) -> "MultiPoly":
        return cls({(deg_s, deg_t): coeff})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def coefficient(self, deg_s: int, deg_t: int) -> Fraction:
        return self._terms.get((deg_s, deg_t), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_univariate_in_t(self) -> bool:
        return all(ds == 0 for ds, _ in self._terms)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def total_degree(self) -> int:
        """Max of deg_s + deg_t over the support (-1 for the zero polynomial)."""
        return max((ds + dt for ds, dt in self._terms), default=-1)

    def s_degree(self) -> int:
        return max((ds for ds, _ in self._terms), default=-1)

    def t_degree(self) -> int:
        return max((dt for _, dt in self._terms), default=-1)

    def coefficient_of_s(self, deg_s: int) -> "MultiPoly":
        """The coefficient of s^deg_s, a polynomial in t alone."""
        return MultiPoly(
            {(0, dt): c for (ds, dt), c in self._terms.items() if ds == deg_s}
        )

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + value
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({key: -value for key, value in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(
                {key: value * other for key, value in self._terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms: dict[Exponents, Fraction] = {}
        for (a, b), c1 in self._terms.items():
            for (d, e), c2 in other._terms.items():
                key = (a + d, b + e)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- evaluation / substitution -------------------------------------

    def evaluate(self, s_value: Scalar, t_value: Scalar) -> Fraction:
        s_value, t_value = Fraction(s_value), Fraction(t_value)
        total = Fraction(0)
        for (ds, dt), c in self._terms.items():
            total += c * s_value**ds * t_value**dt
        return total

    def substitute_t(self, replacement: "MultiPoly") -> "MultiPoly":
        """Replace t by another polynomial, leaving s untouched."""
        powers = {0: MultiPoly.one()}
        result = MultiPoly.zero()
        for (ds, dt), c in sorted(self._terms.items()):
            if dt not in powers:
                powers[dt] = replacement**dt
            result = result + MultiPoly.monomial(ds, 0, c) * powers[dt]
        return result

    def extract_t_factor(self) -> "MultiPoly":
        """Divide by t; every term must have deg_t >= 1."""
        if any(dt == 0 for _, dt in self._terms):
            raise ValueError("polynomial is not divisible by t")
        return MultiPoly({(ds, dt - 1): c for (ds, dt), c in self._terms.items()})

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for (ds, dt), c in sorted(self._terms.items()):
            factors = []
            if ds:
                factors.append("s" if ds == 1 else f"s^{ds}")
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            if not factors:
                chunks.append(str(c))
            elif c == 1:
                chunks.append("*".join(factors))
            elif c == -1:
                chunks.append("-" + "*".join(factors))
            else:
                chunks.append(str(c) + "*" + "*".join(factors))
        return " + ".join(chunks).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self._terms!r})"


def _as_poly(value) -> "MultiPoly":
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.constant(value)
    return NotImplemented


@lru_cache(maxsize=None)
def _descent_counts(n: int) -> tuple[int, ...]:
    """Row n of the triangle counting permutations of [n] by descents."""
    if n == 0:
        return (1,)
    prev = _descent_counts(n - 1)
    row = []
    for j in range(n):
        here = 0
        if j < len(prev):
            here += (j + 1) * prev[j]
        if j - 1 >= 0 and j - 1 < len(prev):
            here += (n - j) * prev[j - 1]
        row.append(here)
    return tuple(row)


@lru_cache(maxsize=None)
def eulerian(n: int) -> MultiPoly:
    """The n-th Eulerian polynomial, lowest term t^1 for n >= 1.

    >>> str(eulerian(4))
    't + 11*t^2 + 11*t^3 + t^4'
    >>> str(eulerian(0))
    '1'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return MultiPoly.one()
    return MultiPoly({(0, j + 1): c for j, c in enumerate(_descent_counts(n)) if c})


@dataclass(frozen=True)
class GammaExpansion:
    """A polynomial written as sum of gamma_i * t^i * (1+t)^(m-2i).

    ``center_numerator`` is m (the center of symmetry is m/2). The
    expansion exists iff the source polynomial is symmetric about m/2;
    ``positive`` records whether every gamma_i is nonnegative.
    """

    center_numerator: int
    gammas: tuple[Fraction, ...]

    @property
    def positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def is_integral(self) -> bool:
        return all(g.denominator == 1 for g in self.gammas)

    def reconstruct(self) -> MultiPoly:
        one_plus_t = MultiPoly.one() + MultiPoly.t()
        total = MultiPoly.zero()
        for i, g in enumerate(self.gammas):
            if g:
                total = total + (
                    MultiPoly.monomial(0, i, g) * one_plus_t ** (self.center_numerator - 2 * i)
                )
        return total


def gamma_expand(f: MultiPoly, center_numerator: int) -> GammaExpansion:
    """Expand a polynomial in t in the basis t^i (1+t)^(m-2i).

    Peels coefficients from the low-degree end; the expansion is unique
    when it exists. Raises :class:`GammaExpansionError` when f is not
    symmetric about m/2 (negative gamma values are *not* an error -- they
    come back as a successful expansion with ``positive == False``).

    >>> f = MultiPoly({(0, 0): 1, (0, 1): 11, (0, 2): 11, (0, 3): 1})
    >>> gamma_expand(f, 3).gammas
    (Fraction(1, 1), Fraction(8, 1))
    """
    if not f.is_univariate_in_t():
        raise ValueError("gamma expansion applies to polynomials in t alone")
    m = center_numerator
    if m < 0 or f.t_degree() > m:
        raise GammaExpansionError(
            f"degree {f.t_degree()} exceeds center numerator {m}", f
        )
    one_plus_t = MultiPoly.one() + MultiPoly.t()
    residual = f
    gammas = []
    for i in range(m // 2 + 1):
        g = residual.coefficient(0, i)
        gammas.append(g)
        if g:
            residual = residual - MultiPoly.monomial(0, i, g) * one_plus_t ** (m - 2 * i)
    if not residual.is_zero():
        raise GammaExpansionError(
            f"polynomial is not symmetric about {m}/2", residual
        )
    return GammaExpansion(center_numerator=m, gammas=tuple(gammas))


@lru_cache(maxsize=None)
def _half_binomial(j: int) -> Fraction:
    """Binomial coefficient (1/2 choose j)."""
    value = Fraction(1)
    for i in range(j):
        value *= Fraction(1, 2) - i
        value /= i + 1
    return value


class TruncSeries:
    """Bivariate power series truncated at a total degree.

    All terms with deg_s + deg_t > order are identified with zero, so the
    arithmetic is exact in the quotient ring. Combining two series keeps
    the smaller order.

    >>> one = TruncSeries.from_poly(MultiPoly.one(), 3)
    >>> t = TruncSeries.from_poly(MultiPoly.t(), 3)
    >>> str((one / (one - t)).to_poly(3))
    '1 + t + t^2 + t^3'
    """

    __slots__ = ("_terms", "order")

    def __init__(self, terms: Mapping[Exponents, Scalar], order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        self._terms = {
            key: value
            for key, value in _clean(terms).items()
            if key[0] + key[1] <= order
        }

    @classmethod
    def from_poly(cls, p: MultiPoly, order: int) -> "TruncSeries":
        return cls(p.terms, order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "TruncSeries":
        return cls({(0, 0): c}, order)

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def coefficient(self, deg_s: int, deg_t: int) -> Fraction:
        return self._terms.get((deg_s, deg_t), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.constant(other, self.order)
        if isinstance(other, MultiPoly):
            return TruncSeries.from_poly(other, self.order)
        return NotImplemented

    def __add__(self, other) -> "TruncSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + value
        return TruncSeries(terms, order)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(
            {key: -value for key, value in self._terms.items()}, self.order
        )

    def __sub__(self, other) -> "TruncSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return TruncSeries(
                {key: value * other for key, value in self._terms.items()},
                self.order,
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        terms: dict[Exponents, Fraction] = {}
        for (a, b), c1 in self._terms.items():
            for (d, e), c2 in other._terms.items():
                ds, dt = a + d, b + e
                if ds + dt > order:
                    continue
                key = (ds, dt)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return TruncSeries(terms, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.order == other.order and self._terms == other._terms

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c = self.constant_term()
        if not c:
            raise ValueError("cannot invert a series with zero constant term")
        # 1/(c(1 - r)) = (1/c) * sum r^j, where r has no constant term, so
        # r^j contributes nothing beyond j > order.
        r = TruncSeries(
            {key: -value / c for key, value in self._terms.items() if key != (0, 0)},
            self.order,
        )
        result = TruncSeries.constant(1, self.order)
        power = TruncSeries.constant(1, self.order)
        for _ in range(self.order):
            power = power * r
            if not power._terms:
                break
            result = result + power
        return result * (Fraction(1) / c)

    def __truediv__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def sqrt(self) -> "TruncSeries":
        """Square root with constant term 1 (the +1 branch).

        >>> t = TruncSeries.from_poly(MultiPoly.t(), 3)
        >>> (1 - t).sqrt().terms[(0, 1)]
        Fraction(-1, 2)
        """
        if self.constant_term() != 1:
            raise ValueError("square root requires constant term exactly 1")
        h = TruncSeries(
            {key: value for key, value in self._terms.items() if key != (0, 0)},
            self.order,
        )
        result = TruncSeries.constant(1, self.order)
        power = TruncSeries.constant(1, self.order)
        for j in range(1, self.order + 1):
            power = power * h
            if not power._terms:
                break
            result = result + power * _half_binomial(j)
        return result

    def extract_t_factor(self) -> "TruncSeries":
        """Divide by t, reducing the truncation order by one."""
        if any(dt == 0 for _, dt in self._terms):
            raise ValueError("series is not divisible by t")
        return TruncSeries(
            {(ds, dt - 1): c for (ds, dt), c in self._terms.items()},
            self.order - 1,
        )

    def extract_s_factor(self) -> "TruncSeries":
        """Divide by s, reducing the truncation order by one."""
        if any(ds == 0 for ds, _ in self._terms):
            raise ValueError("series is not divisible by s")
        return TruncSeries(
            {(ds - 1, dt): c for (ds, dt), c in self._terms.items()},
            self.order - 1,
        )

    def to_poly(self, max_total_degree: int) -> MultiPoly:
        """Interpret the series as a polynomial of bounded total degree.

        Any nonzero term with total degree above ``max_total_degree`` but
        within the truncation order means the series does not represent
        such a polynomial (or the order was too small to tell); that is
        reported loudly rather than truncated away.
        """
        rogue = {
            key: value
            for key, value in self._terms.items()
            if key[0] + key[1] > max_total_degree
        }
        if rogue:
            worst = sorted(rogue)[0]
            raise TruncationResidueError(
                f"nonzero term s^{worst[0]}*t^{worst[1]} above total degree "
                f"{max_total_degree} (truncation order {self.order}): "
                "not a polynomial of the asserted degree, or order too low"
            )
        return MultiPoly(self._terms)

    def __str__(self) -> str:
        return f"{MultiPoly(self._terms)} + O(degree {self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncSeries({self._terms!r}, order={self.order})"


def poly_at_series(p: MultiPoly, a: TruncSeries) -> TruncSeries:
    """Evaluate a polynomial in t at a series argument.

    >>> geom = poly_at_series(eulerian(2), TruncSeries.from_poly(MultiPoly.t(), 4))
    >>> str(geom.to_poly(2))
    't + t^2'
    """
    if not p.is_univariate_in_t():
        raise ValueError("substitution argument must be a polynomial in t alone")
    coeffs = {dt: c for (_, dt), c in p.terms.items()}
    result = TruncSeries.constant(0, a.order)
    power = TruncSeries.constant(1, a.order)
    for j in range(0, max(coeffs, default=0) + 1):
        if j > 0:
            power = power * a
        c = coeffs.get(j)
        if c:
            result = result + power * c
    return result
