"""Closed forms for the distribution polynomials, with verification.

Each operation here has a brute-force counterpart in
:mod:`cyclestat.enumeration`; the point of this module is to compute the
same polynomials along an entirely different route and to package the
comparison as machine-checkable reports.

The routes implemented:

* ``brenti``: the excedance distribution over a conjugacy class as a
  product of Eulerian polynomials scaled by the class size.
* ``theorem1_joint``: the joint (cval, exc) distribution over a
  conjugacy class, obtained from the same product by substituting two
  algebraic functions u(s,t), v(s,t) that involve sqrt((1+t)^2 - 4st);
  everything is evaluated in exact truncated power series and converted
  back to a polynomial with a loud residue check.
* ``theorem6_cval``: the cyclic-valley distribution, via the analogous
  univariate substitution w(t) built from sqrt(1-t).
* ``lemma1_check`` / ``theorem4_check`` / ``theorem5_check``: identities
  relating the excedance distribution to the joint (or cval)
  distribution over any hop-invariant family, verified in cleared
  polynomial form (no radicals, exact equality).
* ``theorem2_gamma`` and the corollary checks: gamma-positivity of the
  excedance distribution with its two combinatorial readings of the
  gamma coefficients (orbit representatives without cyclic double
  ascents, and orbit counts scaled by powers of 2).
* ``egf_snki``: the table of counts by (length, fixed points, cyclic
  valleys) extracted from an exponential generating function, computed
  radical-free as a truncated series in x over exact polynomials.

Claim identifiers ("brenti", "theorem1", "cor3", ...) are the stable
vocabulary used by reports and the command-line ``verify`` subcommand.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (
    GammaExpansion,
    GammaExpansionError,
    MultiPoly,
    TruncSeries,
    eulerian,
    gamma_expand,
    poly_at_series,
)
from .enumeration import (
    ClassSpec,
    count_snki,
    dist_cval,
    dist_exc,
    dist_joint,
    z_lambda,
)
from .hopping import orbit
from .permutations import CycleType, Permutation, stat_counts

__all__ = [
    "VerificationReport",
    "Theorem2Gamma",
    "brenti",
    "theorem1_joint",
    "theorem6_cval",
    "lemma1_check",
    "theorem2_gamma",
    "theorem2_check",
    "corollary2_check",
    "corollary3_check",
    "corollary4_check",
    "theorem4_check",
    "theorem5_check",
    "egf_snki",
]


def _first_difference(lhs: MultiPoly, rhs: MultiPoly):
    for key in sorted(set(lhs.terms) | set(rhs.terms)):
        a, b = lhs.coefficient(*key), rhs.coefficient(*key)
        if a != b:
            return {"monomial": {"s": key[0], "t": key[1]}, "lhs": str(a), "rhs": str(b)}
    return None


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity instance: pass iff lhs == rhs."""

    claim: str
    instance: dict
    lhs: MultiPoly
    rhs: MultiPoly

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def witness(self):
        """First differing coefficient, or None when the check passes."""
        return _first_difference(self.lhs, self.rhs)

    def to_json_record(self) -> dict:
        record = {"claim": self.claim, "instance": self.instance, "verdict": self.verdict}
        if not self.passed:
            record["witness"] = self.witness
        return record


def _require_integral(p: MultiPoly, context: str) -> MultiPoly:
    if not p.has_integer_coefficients():
        raise ArithmeticError(f"{context}: non-integer coefficient in {p}")
    return p


def brenti(ct: CycleType) -> MultiPoly:
    """Excedance distribution over the class of cycle type lambda:
    (n!/z_lambda) * prod over part sizes i of [A_(i-1)(t)/(i-1)!]^(m_i).

    >>> str(brenti(CycleType((3,))))
    't + t^2'
    """
    poly = MultiPoly.constant(Fraction(factorial(ct.n), z_lambda(ct)))
    for size, mult in sorted(ct.multiplicities.items()):
        factor = eulerian(size - 1) * Fraction(1, factorial(size - 1))
        poly = poly * factor**mult
    return _require_integral(poly, "brenti")


def _theorem1_substitutions(order: int) -> tuple[TruncSeries, TruncSeries]:
    """The series u(s,t), v(s,t) with radicand (1+t)^2 - 4st.

    u = (1 + t^2 - 2st - (1-t) R) / (2 (1-s) t),
    v = ((1+t)^2 - 2st - (1+t) R) / (2 s t),      R = sqrt((1+t)^2 - 4st).

    Both numerators are divisible by the monomials below them, so the
    quotients are honest power series; dividing by t (and s) reduces the
    carried truncation order, which is why callers ask for a little
    headroom.
    """
    s = MultiPoly.s()
    t = MultiPoly.t()
    one = MultiPoly.one()

    radicand = TruncSeries.from_poly((one + t) ** 2 - 4 * s * t, order)
    root = radicand.sqrt()

    u_num = TruncSeries.from_poly(one + t * t - 2 * s * t, order) - (
        TruncSeries.from_poly(one - t, order) * root
    )
    u = u_num.extract_t_factor() / TruncSeries.from_poly(2 * (one - s), order - 1)

    v_num = TruncSeries.from_poly((one + t) ** 2 - 2 * s * t, order) - (
        TruncSeries.from_poly(one + t, order) * root
    )
    v = v_num.extract_s_factor().extract_t_factor() / 2
    return u, v


def theorem1_joint(ct: CycleType, order: int | None = None) -> MultiPoly:
    """Joint (cval, exc) distribution over a conjugacy class, closed form.

    (n!/z_lambda) * ((1+u)/(1+uv))^(n - m_1) * prod [A_(i-1)(v)/(i-1)!]^(m_i)
    evaluated in truncated series arithmetic and converted back to an
    exact polynomial. Must equal ``dist_joint`` of the same class.

    >>> str(theorem1_joint(CycleType((3,))))
    's*t + s*t^2'
    """
    n = ct.n
    order = n + 4 if order is None else order
    u, v = _theorem1_substitutions(order)
    core = (1 + u) / (1 + u * v)
    result = core ** (n - ct.fixed_point_count)
    for size, mult in sorted(ct.multiplicities.items()):
        factor = poly_at_series(eulerian(size - 1), v) * Fraction(
            1, factorial(size - 1)
        )
        result = result * factor**mult
    result = result * Fraction(factorial(n), z_lambda(ct))
    if result.order <= n:
        # The s*t extraction inside v costs two orders, so a too-small
        # request would bypass the residue check instead of tripping it.
        raise ValueError(
            f"truncation order {order} leaves no residue margin above degree {n}"
        )
    return _require_integral(result.to_poly(n), "theorem1_joint")


def theorem6_cval(ct: CycleType, order: int | None = None) -> MultiPoly:
    """Cyclic-valley distribution over a conjugacy class, closed form.

    (n!/z_lambda) * (1 + sqrt(1-t))^(n - m_1) * prod [A_(i-1)(w)/(i-1)!]^(m_i)
    with w = 2 t^-1 (1 - sqrt(1-t)) - 1, evaluated in truncated series.
    Must equal ``dist_cval`` of the same class.

    >>> str(theorem6_cval(CycleType((3,))))
    '2*t'
    """
    n = ct.n
    order = n + 4 if order is None else order
    root = TruncSeries.from_poly(MultiPoly.one() - MultiPoly.t(), order).sqrt()
    w = (1 - root).extract_t_factor() * 2 - 1
    result = (1 + root) ** (n - ct.fixed_point_count)
    for size, mult in sorted(ct.multiplicities.items()):
        factor = poly_at_series(eulerian(size - 1), w) * Fraction(
            1, factorial(size - 1)
        )
        result = result * factor**mult
    result = result * Fraction(factorial(n), z_lambda(ct))
    if result.order <= n:
        raise ValueError(
            f"truncation order {order} leaves no residue margin above degree {n}"
        )
    return _require_integral(result.to_poly(n), "theorem6_cval")


def _orbit_weight_sum(profiles, n: int, k: int) -> MultiPoly:
    """Sum of (s+t)^(exc-cval) (1+st)^(n-k-cval-exc) t^cval (1+s)^(2 cval)
    over an iterable of (cval, exc, multiplicity) profiles."""
    s = MultiPoly.s()
    t = MultiPoly.t()
    one = MultiPoly.one()
    total = MultiPoly.zero()
    for cval, exc, mult in profiles:
        term = (
            (s + t) ** (exc - cval)
            * (one + s * t) ** (n - k - cval - exc)
            * MultiPoly.monomial(0, cval, mult)
            * (one + s) ** (2 * cval)
        )
        total = total + term
    return total


def lemma1_check(sigma: Permutation) -> VerificationReport:
    """Orbit-level identity behind the gamma results, in cleared form:

    (sum over the orbit of t^exc) * (1+s)^(n-k)
      = sum over the orbit of
        (s+t)^(exc-cval) (1+st)^(n-k-cval-exc) t^cval (1+s)^(2 cval).
    """
    n = sigma.n
    k = stat_counts(sigma).fix
    members = orbit(sigma, collect_members=True).members
    one_plus_s = MultiPoly.one() + MultiPoly.s()
    lhs = MultiPoly.zero()
    profiles = []
    for member in members:
        counts = stat_counts(member)
        lhs = lhs + MultiPoly.monomial(0, counts.exc)
        profiles.append((counts.cval, counts.exc, 1))
    lhs = lhs * one_plus_s ** (n - k)
    rhs = _orbit_weight_sum(profiles, n, k)
    return VerificationReport(
        claim="lemma1",
        instance={"sigma": list(sigma.word)},
        lhs=lhs,
        rhs=rhs,
    )


def theorem4_check(spec: ClassSpec) -> VerificationReport:
    """The lemma summed over a hop-invariant family, cleared form:

    dist_exc * (1+s)^(n-k) = sum over members of
    (s+t)^(exc-cval) (1+st)^(n-k-cval-exc) t^cval (1+s)^(2 cval).
    """
    from .enumeration import _combined_counts

    n, k = spec.n, spec.fixed_point_count
    lhs = dist_exc(spec) * (MultiPoly.one() + MultiPoly.s()) ** (n - k)
    profiles = [
        (cval, exc, mult)
        for (cval, exc), mult in sorted(_combined_counts(spec, None).items())
    ]
    rhs = _orbit_weight_sum(profiles, n, k)
    return VerificationReport(
        claim="theorem4", instance=spec.instance(), lhs=lhs, rhs=rhs
    )


def theorem5_check(spec: ClassSpec) -> VerificationReport:
    """Specialization s = 1 of the previous identity, cleared form:

    dist_exc * 2^(n-k) = sum_i c_i 4^i t^i (1+t)^(n-k-2i)
    where c_i is the number of members with i cyclic valleys.
    """
    n, k = spec.n, spec.fixed_point_count
    lhs = dist_exc(spec) * 2 ** (n - k)
    cval_poly = dist_cval(spec)
    one_plus_t = MultiPoly.one() + MultiPoly.t()
    rhs = MultiPoly.zero()
    for i in range(cval_poly.t_degree() + 1):
        c = cval_poly.coefficient(0, i)
        if c:
            rhs = rhs + MultiPoly.monomial(0, i, c * 4**i) * one_plus_t ** (
                n - k - 2 * i
            )
    return VerificationReport(
        claim="theorem5", instance=spec.instance(), lhs=lhs, rhs=rhs
    )


@dataclass(frozen=True)
class Theorem2Gamma:
    """Gamma data for the excedance distribution over a hop-invariant family.

    Three independently computed readings of the same numbers:

    * ``expansion``: algebraic expansion of dist_exc about (n-k)/2;
    * ``by_no_double_ascent``: gamma_i as the number of members with i
      cyclic valleys and no cyclic double ascent (one per orbit);
    * ``by_orbit_scaling``: gamma_i as the members with i cyclic valleys
      divided by the orbit size 2^(n-k-2i).
    """

    spec: ClassSpec
    expansion: GammaExpansion
    by_no_double_ascent: tuple[int, ...]
    by_orbit_scaling: tuple[Fraction, ...]

    @property
    def consistent(self) -> bool:
        padded = list(self.expansion.gammas)
        width = (self.spec.n - self.spec.fixed_point_count) // 2 + 1
        padded += [Fraction(0)] * (width - len(padded))
        return (
            self.expansion.positive
            and self.expansion.is_integral()
            and tuple(padded) == tuple(map(Fraction, self.by_no_double_ascent))
            and tuple(padded) == tuple(self.by_orbit_scaling)
        )


def theorem2_gamma(spec: ClassSpec) -> Theorem2Gamma:
    """Expand dist_exc(spec) about (n-k)/2 and count its gamma witnesses.

    >>> g = theorem2_gamma(ClassSpec.with_fixed_points(3, 0))
    >>> g.expansion.gammas, g.by_no_double_ascent, g.consistent
    ((Fraction(0, 1), Fraction(1, 1)), (0, 1), True)
    """
    from .enumeration import _combined_counts

    n, k = spec.n, spec.fixed_point_count
    expansion = gamma_expand(dist_exc(spec), n - k)
    counts = _combined_counts(spec, None)
    width = (n - k) // 2 + 1
    no_dasc = [0] * width
    scaled = [Fraction(0)] * width
    for (cval, exc), mult in counts.items():
        if exc == cval:  # no cyclic double ascents: cdasc = exc - cval
            no_dasc[cval] += mult
        scaled[cval] += Fraction(mult, 2 ** (n - k - 2 * cval))
    return Theorem2Gamma(
        spec=spec,
        expansion=expansion,
        by_no_double_ascent=tuple(no_dasc),
        by_orbit_scaling=tuple(scaled),
    )


def theorem2_check(spec: ClassSpec) -> VerificationReport:
    """Report form of :func:`theorem2_gamma`: dist_exc against the
    reconstruction from the no-double-ascent counts, with the two gamma
    witness readings required to agree.

    The basis t^i (1+t)^(m-2i) is linearly independent, so the two count
    vectors agree exactly when their reconstructions do; when they
    differ, the report compares those reconstructions directly so the
    witness points at the discrepancy.
    """
    instance = spec.instance()
    n, k = spec.n, spec.fixed_point_count
    lhs = dist_exc(spec)
    try:
        data = theorem2_gamma(spec)
    except GammaExpansionError:
        # An asymmetric distribution would falsify the claim outright.
        return VerificationReport(
            claim="theorem2", instance=instance, lhs=lhs, rhs=MultiPoly.zero()
        )
    rec_no_dasc = GammaExpansion(
        n - k, tuple(Fraction(g) for g in data.by_no_double_ascent)
    ).reconstruct()
    rec_scaled = GammaExpansion(n - k, data.by_orbit_scaling).reconstruct()
    if rec_no_dasc != rec_scaled:
        return VerificationReport(
            claim="theorem2", instance=instance, lhs=rec_no_dasc, rhs=rec_scaled
        )
    return VerificationReport(
        claim="theorem2", instance=instance, lhs=lhs, rhs=rec_no_dasc
    )


def corollary2_check(ct: CycleType) -> list[GammaExpansion]:
    """Gamma-expand every s-coefficient of the joint distribution.

    The coefficient of s^i is the excedance distribution over the class
    members with i cyclic valleys, so each expands about (n-k)/2 with
    nonnegative integer gamma values. Raises GammaExpansionError if any
    coefficient is asymmetric (which would falsify the claim).
    """
    joint = dist_joint(ClassSpec.of_cycle_type(ct))
    m = ct.n - ct.fixed_point_count
    expansions = []
    for i in range(joint.s_degree() + 1):
        expansions.append(gamma_expand(joint.coefficient_of_s(i), m))
    return expansions


def corollary3_check(n: int, k: int) -> VerificationReport:
    """Excedance distribution over the k-fixed-point stratum against
    sum_i count(n,k,i)/2^(n-k-2i) * t^i (1+t)^(n-k-2i)."""
    lhs = dist_exc(ClassSpec.with_fixed_points(n, k))
    one_plus_t = MultiPoly.one() + MultiPoly.t()
    rhs = MultiPoly.zero()
    for i in range((n - k) // 2 + 1):
        count = count_snki(n, k, i)
        if count:
            weight = Fraction(count, 2 ** (n - k - 2 * i))
            rhs = rhs + MultiPoly.monomial(0, i, weight) * one_plus_t ** (n - k - 2 * i)
    return VerificationReport(
        claim="cor3", instance={"n": n, "k": k}, lhs=lhs, rhs=rhs
    )


def corollary4_check(n: int, k: int, i: int) -> VerificationReport:
    """Excedance distribution over a single (fixed points, valleys) cell
    against count/2^(n-k-2i) * t^i (1+t)^(n-k-2i)."""
    lhs = dist_exc(ClassSpec.with_fixed_points_and_valleys(n, k, i))
    count = count_snki(n, k, i)
    weight = Fraction(count, 2 ** (n - k - 2 * i))
    rhs = MultiPoly.monomial(0, i, weight) * (MultiPoly.one() + MultiPoly.t()) ** (
        n - k - 2 * i
    )
    return VerificationReport(
        claim="cor4", instance={"n": n, "k": k, "i": i}, lhs=lhs, rhs=rhs
    )


def _egf_denominator_coefficient(j: int) -> MultiPoly:
    """Coefficient of x^j in the radical-free denominator

    sum_m x^(2m) (1-t)^m / (2m)!  -  sum_m x^(2m+1) (1-t)^m / (2m+1)!.
    """
    power = (MultiPoly.one() - MultiPoly.t()) ** (j // 2)
    sign = 1 if j % 2 == 0 else -1
    return power * Fraction(sign, factorial(j))


def egf_snki(n_max: int) -> dict[tuple[int, int, int], int]:
    """Counts of permutations by (length, fixed points, cyclic valleys),
    extracted from the exponential generating function

        1 + sum |...| u^k t^i x^n / n!
            = sqrt(1-t) e^((u-1)x)
              / (sqrt(1-t) cosh(x sqrt(1-t)) - sinh(x sqrt(1-t))).

    The sqrt(1-t) factors cancel: dividing the denominator by sqrt(1-t)
    term by term leaves only integer powers of (1-t), so the whole
    computation is a truncated series in x whose coefficients are exact
    polynomials in u and t (u rides in the s-slot of MultiPoly).

    >>> table = egf_snki(3)
    >>> table[(3, 0, 1)], table[(3, 1, 1)], table[(3, 3, 0)]
    (2, 3, 1)
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    size = n_max + 1
    u_minus_1 = MultiPoly.s() - MultiPoly.one()
    numerator = [u_minus_1**j * Fraction(1, factorial(j)) for j in range(size)]
    denominator = [_egf_denominator_coefficient(j) for j in range(size)]

    # Invert the denominator as a power series in x over the polynomial
    # ring: D = 1 - r with r starting at x^1, so 1/D = sum r^j.
    inverse = [MultiPoly.zero()] * size
    inverse[0] = MultiPoly.one()
    for j in range(1, size):
        acc = MultiPoly.zero()
        for m in range(1, j + 1):
            acc = acc + denominator[m] * inverse[j - m]
        inverse[j] = -acc

    table: dict[tuple[int, int, int], int] = {}
    for n in range(1, size):
        coeff = MultiPoly.zero()
        for m in range(n + 1):
            coeff = coeff + numerator[m] * inverse[n - m]
        poly = _require_integral(coeff * factorial(n), f"egf_snki x^{n}")
        for (k, i), value in poly.terms.items():
            if value < 0:
                raise ArithmeticError(f"negative count at n={n}, k={k}, i={i}")
            table[(n, k, i)] = int(value)
    return table
