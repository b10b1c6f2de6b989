import random

import pytest

from cyclestat.permutations import (
    CycleForm,
    CycleType,
    cycle_type,
    des,
    from_cycle_form,
    from_one_line,
    identity,
    left_to_right_maxima,
    parse_cycle_text,
    parse_permutation,
    stat_counts,
    stat_sets,
    to_cycle_form,
)

from conftest import all_perms, oracle_des, oracle_exc

RUNNING_EXAMPLE = "(5,2,1)(6)(8)(11,9,10,4,3,7)"


class TestConstruction:
    def test_from_one_line(self):
        p = from_one_line((3, 7, 1, 8, 9, 6, 5, 4, 2))
        assert p.n == 9
        assert p(1) == 3 and p(9) == 2

    def test_identity_of_s1(self):
        assert from_one_line((1,)) == identity(1)

    def test_empty_permutation(self):
        assert identity(0).n == 0
        assert stat_counts(identity(0)) == (0, 0, 0, 0, 0, 0)

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            from_one_line((2, 2, 1))

    def test_rejects_zero_based(self):
        with pytest.raises(ValueError, match="0-indexed"):
            from_one_line((0, 1, 2))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            from_one_line((1, 5))

    def test_roundtrip_word(self):
        for p in all_perms(5):
            assert from_one_line(p.word) == p


class TestCycleForm:
    def test_to_cycle_form_nine_letters(self):
        p = parse_permutation("649237185")
        assert str(to_cycle_form(p)) == "(4,2)(7,1,6)(8)(9,5,3)"

    def test_one_line_example(self):
        p = parse_permutation("371896542")
        assert str(to_cycle_form(p)) == "(3,1)(6)(8,4)(9,2,7,5)"

    def test_identity_all_fixed(self):
        assert str(to_cycle_form(identity(3))) == "(1)(2)(3)"

    def test_from_cycle_form_inverse(self):
        c = parse_cycle_text("(4,2)(7,1,6)(8)(9,5,3)")
        assert str(from_cycle_form(c)) == "649237185"

    def test_eleven_letter_example(self):
        p = parse_permutation(RUNNING_EXAMPLE)
        images = {5: 2, 2: 1, 1: 5, 6: 6, 8: 8, 11: 9, 9: 10, 10: 4, 4: 3, 3: 7, 7: 11}
        for a, b in images.items():
            assert p(a) == b

    def test_noncanonical_input_normalized(self):
        c = CycleForm(((1, 6, 7), (2, 4), (8,), (3, 9, 5)))
        assert str(c) == "(4,2)(7,1,6)(8)(9,5,3)"

    def test_rejects_non_partition(self):
        with pytest.raises(ValueError):
            CycleForm(((1, 2), (2, 3)))
        with pytest.raises(ValueError):
            CycleForm(((1, 3),))

    def test_roundtrip_exhaustive(self):
        for n in range(0, 7):
            for p in all_perms(n):
                assert from_cycle_form(to_cycle_form(p)) == p

    def test_roundtrip_random_large(self):
        rng = random.Random(20240811)
        for n in (9, 12, 20):
            for _ in range(50):
                word = list(range(1, n + 1))
                rng.shuffle(word)
                p = from_one_line(word)
                assert from_cycle_form(to_cycle_form(p)) == p


class TestCycleType:
    def test_mixed_cycle_type(self):
        assert cycle_type(parse_permutation("371896542")).parts == (1, 2, 2, 4)

    def test_identity(self):
        assert cycle_type(identity(5)).parts == (1, 1, 1, 1, 1)

    def test_eleven_letter_example(self):
        assert cycle_type(parse_permutation(RUNNING_EXAMPLE)).parts == (1, 1, 3, 6)

    def test_from_text_comma(self):
        assert CycleType.from_text("1,5,5").parts == (1, 5, 5)

    def test_from_text_multiplicity(self):
        assert CycleType.from_text("1^1 5^2").parts == (1, 5, 5)
        assert CycleType.from_text("2^2").parts == (2, 2)

    def test_multiplicities(self):
        ct = CycleType((1, 2, 2, 4))
        assert ct.multiplicities == {1: 1, 2: 2, 4: 1}
        assert ct.n == 9
        assert ct.fixed_point_count == 1

    def test_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            CycleType((0, 2))


class TestDescents:
    def test_nine_letter_example(self):
        assert des(parse_permutation("371896542")) == 5

    def test_identity(self):
        assert des(identity(6)) == 0

    def test_decreasing(self):
        assert des(from_one_line((5, 4, 3, 2, 1))) == 4


class TestStatSets:
    def test_running_example_sets(self):
        s = stat_sets(parse_permutation(RUNNING_EXAMPLE))
        assert s.exc_set == {1, 3, 7, 9}
        assert s.cval_set == {1, 3, 9}
        assert s.cpk_set == {5, 10, 11}
        assert s.cdasc_set == {7}
        assert s.cddes_set == {2, 4}
        assert s.fix_set == {6, 8}

    def test_running_example_counts(self):
        assert stat_counts(parse_permutation(RUNNING_EXAMPLE)) == (4, 3, 3, 1, 2, 2)

    def test_identity_counts(self):
        s = stat_sets(identity(4))
        assert s.fix_set == {1, 2, 3, 4}
        assert not (s.exc_set | s.cval_set | s.cpk_set | s.cdasc_set | s.cddes_set)

    def test_excedances_one_line_example(self):
        assert stat_sets(parse_permutation("371896542")).exc_set == {1, 2, 4, 5}

    def test_three_cycle(self):
        assert stat_counts(from_one_line((2, 3, 1))) == (2, 1, 1, 1, 0, 0)

    def test_letter_classes_partition_n(self):
        # every letter lands in exactly one class, and the counts add to n
        for n in range(0, 8):
            for p in all_perms(n):
                c = stat_counts(p)
                assert c.cval + c.cpk + c.cdasc + c.cddes + c.fix == n
                s = stat_sets(p)
                union = (
                    s.cval_set | s.cpk_set | s.cdasc_set | s.cddes_set | s.fix_set
                )
                assert union == set(range(1, n + 1))
                total = (
                    len(s.cval_set)
                    + len(s.cpk_set)
                    + len(s.cdasc_set)
                    + len(s.cddes_set)
                    + len(s.fix_set)
                )
                assert total == n  # pairwise disjoint

    def test_excedance_decomposition(self):
        for n in range(0, 8):
            for p in all_perms(n):
                s = stat_sets(p)
                assert s.cval_set | s.cdasc_set == s.exc_set
                assert len(s.cval_set) + len(s.cdasc_set) == len(s.exc_set)

    def test_peaks_match_valleys(self):
        for n in range(0, 8):
            for p in all_perms(n):
                c = stat_counts(p)
                assert c.cpk == c.cval

    def test_des_exc_equidistributed(self):
        for n in range(0, 7):
            by_des = [0] * (n + 1)
            by_exc = [0] * (n + 1)
            for p in all_perms(n):
                by_des[oracle_des(p.word)] += 1
                by_exc[oracle_exc(p.word)] += 1
            assert by_des == by_exc


class TestLeftToRightMaxima:
    def test_scan_example(self):
        assert left_to_right_maxima((4, 2, 7, 1, 6, 8, 9, 5, 3)) == {1, 3, 6, 7}

    def test_increasing(self):
        assert left_to_right_maxima(tuple(range(1, 7))) == {1, 2, 3, 4, 5, 6}

    def test_decreasing(self):
        assert left_to_right_maxima((6, 5, 4, 3, 2, 1)) == {1}


class TestParsing:
    def test_compact(self):
        assert parse_permutation("371896542").word == (3, 7, 1, 8, 9, 6, 5, 4, 2)

    def test_comma(self):
        assert parse_permutation("3,7,1,8,9,6,5,4,2").n == 9

    def test_cycles(self):
        assert parse_permutation(RUNNING_EXAMPLE).n == 11

    def test_malformed(self):
        with pytest.raises(ValueError):
            parse_permutation("3,7,x")
        with pytest.raises(ValueError):
            parse_permutation("(1,2")
        with pytest.raises(ValueError):
            parse_permutation("(1,2)junk(3)")
