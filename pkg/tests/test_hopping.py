import random
from itertools import combinations

import pytest

from cyclestat.algebra import MultiPoly
from cyclestat.hopping import (
    HIGH_BOUNDARY,
    LOW_BOUNDARY,
    foata,
    foata_inverse,
    orbit,
    orbit_exc_polynomial,
    phi,
    psi,
    x_factorize,
)
from cyclestat.permutations import (
    cycle_type,
    from_one_line,
    identity,
    parse_permutation,
    stat_counts,
    stat_sets,
    to_cycle_form,
)

from conftest import all_perms


def all_subsets(letters):
    letters = tuple(letters)
    for r in range(len(letters) + 1):
        yield from (set(c) for c in combinations(letters, r))


class TestXFactorization:
    def test_displayed_example(self):
        f = x_factorize((8, 3, 4, 2, 7, 9, 1, 5, 6), 7)
        assert (f.w1, f.w2, f.w4, f.w5) == ((8,), (3, 4, 2), (), (9, 1, 5, 6))
        assert f.kind == "double_ascent"

    def test_max_letter_at_end(self):
        # all smaller letters pile into w2; against a high right boundary
        # the letter is a double ascent and would hop over all of them
        n = 5
        f = x_factorize(tuple(range(1, n + 1)), n)
        assert f.w2 == (1, 2, 3, 4) and f.w4 == () and f.w1 == ()
        assert f.kind == "double_ascent"
        assert f.hopped() == (5, 1, 2, 3, 4)

    def test_single_letter_word(self):
        f = x_factorize((1,), 1)
        assert f.w1 == f.w2 == f.w4 == f.w5 == ()
        assert f.kind == "valley"  # high boundaries on both sides

    def test_low_left_boundary_changes_kind(self):
        f = x_factorize((2, 1), 2, left_boundary=LOW_BOUNDARY)
        assert f.kind == "peak"
        f = x_factorize((2, 1), 2, left_boundary=HIGH_BOUNDARY)
        assert f.kind == "double_descent"

    def test_missing_letter(self):
        with pytest.raises(ValueError, match="does not occur"):
            x_factorize((1, 2, 3), 7)

    def test_concatenation_invariant(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randrange(1, 10)
            word = list(range(1, n + 1))
            rng.shuffle(word)
            x = rng.randrange(1, n + 1)
            f = x_factorize(tuple(word), x)
            assert f.w1 + f.w2 + (f.x,) + f.w4 + f.w5 == tuple(word)
            assert all(a < x for a in f.w2) and all(a < x for a in f.w4)
            # maximality of the two runs
            if f.w1:
                assert f.w1[-1] > x
            if f.w5:
                assert f.w5[0] > x


class TestPhi:
    def test_figure_example(self):
        p = parse_permutation("834279156")
        assert str(phi(p, {6, 7, 8})) == "734289615"

    def test_empty_set(self):
        p = parse_permutation("834279156")
        assert phi(p, set()) == p

    def test_involution_on_figure(self):
        p = parse_permutation("834279156")
        assert phi(phi(p, {6, 7, 8}), {6, 7, 8}) == p

    def test_involution_exhaustive(self):
        for n in range(1, 6):
            for p in all_perms(n):
                for letters in all_subsets(range(1, n + 1)):
                    assert phi(phi(p, letters), letters) == p

    def test_rejects_foreign_letters(self):
        with pytest.raises(ValueError):
            phi(identity(3), {4})


class TestFoata:
    def test_erase_parentheses(self):
        p = parse_permutation("(4,2)(7,1,6)(8)(9,5,3)")
        assert str(foata(p)) == "427168953"

    def test_identity(self):
        assert foata(identity(3)) == identity(3)

    def test_figure_word(self):
        p = parse_permutation("(5,2,3)(8)(9,7,6,4,1)")
        assert str(foata(p)) == "523897641"

    def test_inverse_of_displayed(self):
        p = parse_permutation("427168953")
        assert str(to_cycle_form(foata_inverse(p))) == "(4,2)(7,1,6)(8)(9,5,3)"

    def test_inverse_cuts_at_maxima(self):
        p = parse_permutation("523897641")
        assert str(to_cycle_form(foata_inverse(p))) == "(5,2,3)(8)(9,7,6,4,1)"

    def test_roundtrip_exhaustive(self):
        for n in range(0, 8):
            for p in all_perms(n):
                assert foata_inverse(foata(p)) == p
                assert foata(foata_inverse(p)) == p


class TestPsi:
    def test_figure_example(self):
        p = parse_permutation("(5,2,3)(8)(9,7,6,4,1)")
        assert str(to_cycle_form(psi(p, {3, 7}))) == "(5,3,2)(8)(9,6,4,1,7)"

    def test_fixed_points_unmoved(self):
        p = parse_permutation("(5,2,3)(8)(9,7,6,4,1)")
        assert psi(p, {8}) == p
        for n in range(1, 6):
            for q in all_perms(n):
                assert psi(q, stat_sets(q).fix_set) == q

    def test_involution_on_figure(self):
        p = parse_permutation("(5,2,3)(8)(9,7,6,4,1)")
        assert psi(psi(p, {3, 7}), {3, 7}) == p

    def test_valleys_and_peaks_unmoved(self):
        for p in all_perms(5):
            s = stat_sets(p)
            assert psi(p, s.cval_set | s.cpk_set) == p

    def test_involution_exhaustive_small(self):
        for n in range(1, 6):
            for p in all_perms(n):
                for letters in all_subsets(range(1, n + 1)):
                    assert psi(psi(p, letters), letters) == p

    def test_involution_random_large(self):
        rng = random.Random(123)
        for n in (9, 10):
            for _ in range(60):
                word = list(range(1, n + 1))
                rng.shuffle(word)
                p = from_one_line(word)
                letters = {x for x in range(1, n + 1) if rng.random() < 0.5}
                assert psi(psi(p, letters), letters) == p

    def test_commutativity_pairs(self):
        for n in range(1, 6):
            for p in all_perms(n):
                for x in range(1, n + 1):
                    for y in range(1, n + 1):
                        assert psi(psi(p, {x}), {y}) == psi(psi(p, {y}), {x})

    def test_toggle_rules_small(self):
        # hopping swaps the two double classes inside S and fixes the rest
        for n in range(1, 6):
            for p in all_perms(n):
                s = stat_sets(p)
                for letters in all_subsets(range(1, n + 1)):
                    q = psi(p, letters)
                    sq = stat_sets(q)
                    assert sq.cval_set == s.cval_set
                    assert sq.cpk_set == s.cpk_set
                    assert sq.fix_set == s.fix_set
                    assert sq.cdasc_set == (s.cdasc_set - letters) | (
                        letters & s.cddes_set
                    )
                    assert sq.cddes_set == (s.cddes_set - letters) | (
                        letters & s.cdasc_set
                    )

    def test_preserves_cycle_type(self):
        for n in range(1, 6):
            for p in all_perms(n):
                for letters in all_subsets(range(1, n + 1)):
                    assert cycle_type(psi(p, letters)) == cycle_type(p)


class TestOrbit:
    def test_identity_singleton(self):
        for n in (1, 3, 5):
            rep = orbit(identity(n))
            assert rep.size == 1
            assert rep.representative == identity(n)

    def test_three_cycle(self):
        rep = orbit(from_one_line((2, 3, 1)), collect_members=True)
        assert rep.size == 2
        assert {str(m) for m in rep.members} == {"231", "312"}
        assert rep.size == 2 ** (3 - 0 - 2 * 1)

    def test_running_example_size(self):
        p = parse_permutation("(5,2,1)(6)(8)(11,9,10,4,3,7)")
        rep = orbit(p)
        assert rep.size == 2 ** (11 - 2 - 2 * 3) == 8
        assert stat_counts(rep.representative).cdasc == 0

    def test_orbit_equals_full_subset_definition(self):
        # walking only the toggling letters gives the same set as psi over
        # every subset of [n]
        for n in range(1, 6):
            for p in all_perms(n):
                full = {psi(p, letters) for letters in all_subsets(range(1, n + 1))}
                report = orbit(p, collect_members=True)
                assert set(report.members) == full

    def test_size_law_and_unique_representative(self):
        for n in range(1, 6):
            for p in all_perms(n):
                c = stat_counts(p)
                report = orbit(p, collect_members=True)
                assert report.size == 2 ** (n - c.fix - 2 * c.cval)
                no_dasc = [m for m in report.members if stat_counts(m).cdasc == 0]
                assert no_dasc == [psi(p, stat_sets(p).cdasc_set)]
                assert report.representative == no_dasc[0]

    def test_members_share_invariants(self):
        p = parse_permutation("(5,2,1)(6)(8)(11,9,10,4,3,7)")
        report = orbit(p, collect_members=True)
        base = stat_sets(p)
        for m in report.members:
            s = stat_sets(m)
            assert s.cval_set == base.cval_set
            assert s.cpk_set == base.cpk_set
            assert s.fix_set == base.fix_set
            assert cycle_type(m) == cycle_type(p)


class TestOrbitExcPolynomial:
    def test_identity(self):
        assert orbit_exc_polynomial(identity(4)) == MultiPoly.one()

    def test_three_cycle(self):
        t = MultiPoly.t()
        assert orbit_exc_polynomial(from_one_line((2, 3, 1))) == t + t * t

    def test_product_form(self):
        # sum of t^exc over an orbit is t^cval (1+t)^(n - fix - 2 cval)
        t = MultiPoly.t()
        for n in range(1, 6):
            for p in all_perms(n):
                c = stat_counts(p)
                expected = MultiPoly.monomial(0, c.cval) * (1 + t) ** (
                    n - c.fix - 2 * c.cval
                )
                assert orbit_exc_polynomial(p) == expected

    def test_running_example(self):
        p = parse_permutation("(5,2,1)(6)(8)(11,9,10,4,3,7)")
        t = MultiPoly.t()
        assert orbit_exc_polynomial(p) == MultiPoly.monomial(0, 3) * (1 + t) ** 3
