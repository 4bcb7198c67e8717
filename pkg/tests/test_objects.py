import pytest

from twoline import counting as cnt
from twoline.errors import InstanceTooLarge, InvalidInput
from twoline.objects import (
    ChordConfig,
    ClosedSet,
    Composition,
    DominoPair,
    Lacing,
    Matching,
    MotzkinPath,
    Staircase,
    StepPath,
    Sum012,
    WeightedPath,
    enum_012,
    enum_b_step_paths,
    enum_chords,
    enum_closed_sets,
    enum_compositions,
    enum_domino_pairs,
    enum_lacings,
    enum_matchings,
    enum_peakless,
    enum_staircases,
    enum_weighted_paths,
)
from twoline.partsets import AT_LEAST_TWO, ODD, ONE_TWO


def assert_sorted_unique(objs):
    keys = [o.sort_key() for o in objs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


class TestMatchings:
    def test_two_four_count(self):
        ms = list(enum_matchings(2, 4))
        assert len(ms) == 4
        for m in ms:
            m.validate()
        assert_sorted_unique(ms)

    def test_single_pair(self):
        ms = list(enum_matchings(1, 1))
        assert [m.encode() for m in ms] == ["U1-L1"]

    def test_three_three(self):
        assert sum(1 for _ in enum_matchings(3, 3)) == cnt.a_long(3, 3) == 5

    def test_count_agreement(self):
        for s in range(11):
            for k in range(s + 1):
                assert sum(1 for _ in enum_matchings(k, s - k)) == cnt.a_long(k, s - k)

    def test_odd_total_is_empty(self):
        assert list(enum_matchings(2, 1)) == []

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_matchings(13, 13))

    def test_encode_decode(self):
        for m in enum_matchings(3, 5):
            assert Matching.decode(m.encode()) == m

    def test_rejects_wide_same_line_pair(self):
        m = Matching(4, 0, ((("U", 1), ("U", 3)), (("U", 2), ("U", 4))))
        with pytest.raises(InvalidInput):
            m.validate()

    def test_rejects_crossing_segments(self):
        m = Matching(2, 2, ((("U", 1), ("L", 2)), (("U", 2), ("L", 1))))
        with pytest.raises(InvalidInput):
            m.validate()

    def test_rejects_reused_point(self):
        m = Matching(2, 2, ((("U", 1), ("L", 1)), (("U", 1), ("L", 2))))
        with pytest.raises(InvalidInput):
            m.validate()

    def test_rejects_incomplete(self):
        m = Matching(2, 2, ((("U", 1), ("L", 1)),))
        with pytest.raises(InvalidInput):
            m.validate()

    def test_rejects_out_of_range(self):
        m = Matching(1, 1, ((("U", 1), ("L", 2)),))
        with pytest.raises(InvalidInput):
            m.validate()


class TestPeakless:
    def test_three_one_paths(self):
        ps = list(enum_peakless(3, 1))
        assert [p.encode() for p in ps] == ["DUU", "HHU", "HUH", "UHH"]

    def test_trivial(self):
        assert [p.encode() for p in enum_peakless(1, 1)] == ["U"]

    def test_no_peak_at_two(self):
        assert [p.encode() for p in enum_peakless(2, 0)] == ["DU", "HH"]

    def test_count_agreement(self):
        for k in range(9):
            for n in range(-k, k + 1):
                got = list(enum_peakless(k, n))
                assert len(got) == cnt.m_count(k, n)
                assert_sorted_unique(got)
                for p in got:
                    p.validate()

    def test_endpoint(self):
        assert MotzkinPath("DHU").endpoint == (3, 0)

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_peakless(23, 1))

    def test_rejects_peak(self):
        with pytest.raises(InvalidInput):
            MotzkinPath("UDH").validate()

    def test_rejects_bad_step(self):
        with pytest.raises(InvalidInput):
            MotzkinPath("UXH").validate()


class TestDominoes:
    def test_three_five_count(self):
        assert sum(1 for _ in enum_domino_pairs(3, 5)) == 10

    def test_trivial(self):
        assert [d.encode() for d in enum_domino_pairs(1, 1)] == ["V|V"]

    def test_two_two(self):
        ds = list(enum_domino_pairs(2, 2))
        assert len(ds) == cnt.a_long(2, 2) == 2
        assert_sorted_unique(ds)

    def test_count_agreement(self):
        for k in range(7):
            for n in range(7):
                got = list(enum_domino_pairs(k, n))
                assert len(got) == cnt.d_count(k, n)
                for d in got:
                    d.validate()

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_domino_pairs(21, 1))

    def test_encode_decode(self):
        for d in enum_domino_pairs(3, 5):
            assert DominoPair.decode(d.encode()) == d

    def test_rejects_unequal_verticals(self):
        with pytest.raises(InvalidInput):
            DominoPair(3, 3, "VVV", "VH").validate()  # widths match, counts 3 vs 1

    def test_rejects_wrong_width(self):
        with pytest.raises(InvalidInput):
            DominoPair(3, 3, "VV", "VVV").validate()


class TestClosedSets:
    def test_fence_four(self):
        sizes = sorted(c.size for c in enum_closed_sets(4))
        assert sizes == [0, 1, 1, 2, 2, 3, 3, 4]

    def test_fence_three(self):
        zt = cnt.z_table(3)
        for k in range(4):
            assert sum(1 for _ in enum_closed_sets(3, size_filter=k)) == zt.value(3, k)

    def test_empty_fence(self):
        cs = list(enum_closed_sets(0))
        assert len(cs) == 1 and cs[0].size == 0

    def test_count_agreement(self):
        zt = cnt.z_table(12)
        for m in range(13):
            got = list(enum_closed_sets(m))
            assert len(got) == sum(zt.row(m))
            assert_sorted_unique(got)
            for c in got:
                c.validate()

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_closed_sets(27))

    def test_encode_decode(self):
        for c in enum_closed_sets(7):
            assert ClosedSet.decode(c.encode()) == c

    def test_rejects_open_set(self):
        # upper vertex 1 in the set, its lower neighbour 2 missing
        with pytest.raises(InvalidInput):
            ClosedSet(4, frozenset({0, 1})).validate()
        with pytest.raises(InvalidInput):
            ClosedSet(4, frozenset({1, 2})).validate()

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidInput):
            ClosedSet(4, frozenset({4})).validate()


class TestSums012:
    def test_three_three_listing(self):
        got = [s.encode() for s in enum_012(3, 3)]
        assert got == ["0+1+2", "0+2+1", "1+0+2", "1+1+1", "2+1+0"]

    def test_trivial(self):
        assert [s.encode() for s in enum_012(2, 0)] == ["0+0"]
        assert [s.encode() for s in enum_012(1, 2)] == ["2"]

    def test_count_agreement(self):
        for n in range(9):
            for k in range(2 * n + 1):
                got = list(enum_012(n, k))
                assert len(got) == cnt.s_count(n, k)
                assert_sorted_unique(got)
                for s in got:
                    s.validate()

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_012(21, 3))

    def test_rejects_two_then_zero(self):
        with pytest.raises(InvalidInput):
            Sum012((1, 2, 0)).validate()

    def test_rejects_bad_digit(self):
        with pytest.raises(InvalidInput):
            Sum012((1, 3)).validate()


class TestCompositions:
    def test_filter_by_twos(self):
        got = [c.encode() for c in enum_compositions(ONE_TWO, 5, part_count=(2, 1))]
        assert got == ["1+1+1+2", "1+1+2+1", "1+2+1+1", "2+1+1+1"]

    def test_two_summands(self):
        got = [c.encode() for c in enum_compositions(AT_LEAST_TWO, 7, num_parts=2)]
        assert got == ["2+5", "3+4", "4+3", "5+2"]

    def test_odd_trivial(self):
        assert [c.encode() for c in enum_compositions(ODD, 1)] == ["1"]

    def test_counts_match_series(self):
        from twoline.series import composition_gf_coeffs

        for parts in (ONE_TWO, ODD, AT_LEAST_TWO):
            gf = composition_gf_coeffs(parts, 10)
            for n in range(11):
                assert sum(1 for _ in enum_compositions(parts, n)) == gf.coeff(n)

    def test_sorted(self):
        assert_sorted_unique(list(enum_compositions(ONE_TWO, 9)))

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_compositions(ONE_TWO, 25))

    def test_rejects_part_outside_set(self):
        with pytest.raises(InvalidInput):
            Composition((1, 4), ONE_TWO).validate()


class TestWeightedPaths:
    def test_cost_three_listing(self):
        got = [w.encode() for w in enum_weighted_paths(3)]
        assert got == ["CCC", "CL", "DU", "LC", "UD"]

    def test_zero_cost(self):
        assert [w.encode() for w in enum_weighted_paths(0)] == [""]

    def test_unit_cost(self):
        assert [w.encode() for w in enum_weighted_paths(1)] == ["C"]

    def test_count_agreement(self):
        for c in range(9):
            got = list(enum_weighted_paths(c))
            assert len(got) == cnt.r_diag(c)
            assert_sorted_unique(got)
            for w in got:
                w.validate()
                assert w.cost == c

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_weighted_paths(19))

    def test_rejects_unbalanced(self):
        with pytest.raises(InvalidInput):
            WeightedPath("UC").validate()


class TestChords:
    def test_single_point(self):
        cs = list(enum_chords(1))
        assert len(cs) == 1 and cs[0].inner == () and cs[0].cross == ()

    def test_three_points(self):
        assert sum(1 for _ in enum_chords(3)) == cnt.a_long(3, 3) == 5

    def test_count_agreement(self):
        for n in range(1, 8):
            got = list(enum_chords(n))
            assert len(got) == cnt.r_diag(n)
            assert_sorted_unique(got)
            for c in got:
                c.validate()

    def test_ten_point_example_present(self):
        target = ChordConfig(10, ((4, 8), (5, 7)), ((1, 10), (3, 9)))
        target.validate()
        assert any(c == target for c in enum_chords(10))

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_chords(13))

    def test_encode_decode(self):
        for c in enum_chords(5):
            assert ChordConfig.decode(c.encode()) == c

    def test_rejects_neighbouring_inner_arc(self):
        with pytest.raises(InvalidInput):
            ChordConfig(5, ((2, 3),), ()).validate()

    def test_rejects_reversed_cross_arc(self):
        with pytest.raises(InvalidInput):
            ChordConfig(5, (), ((3, 2),)).validate()
        with pytest.raises(InvalidInput):
            ChordConfig(5, (), ((3, 3),)).validate()

    def test_rejects_crossing_cross_arcs(self):
        with pytest.raises(InvalidInput):
            ChordConfig(4, (), ((1, 3), (2, 4))).validate()

    def test_rejects_shared_endpoint(self):
        with pytest.raises(InvalidInput):
            ChordConfig(5, ((1, 3),), ((3, 5),)).validate()

    def test_rejects_inner_cross_clash_on_cover(self):
        # valid per-period endpoints, but the rotated copies interleave
        with pytest.raises(InvalidInput):
            ChordConfig(10, ((2, 9),), ((3, 8),)).validate()

    def test_nested_cross_arcs_valid(self):
        ChordConfig(4, (), ((1, 4), (2, 3))).validate()


class TestLacings:
    def test_noncrossing_three(self):
        ls = list(enum_lacings(3, 3, "non_self_crossing"))
        assert len(ls) == cnt.a_long(3, 3) == 5
        for l in ls:
            l.validate("non_self_crossing")
        assert_sorted_unique(ls)

    def test_right_three(self):
        ls = list(enum_lacings(3, 3, "right"))
        assert len(ls) == 20
        for l in ls:
            l.validate("right")

    def test_right_two(self):
        got = [l.encode() for l in enum_lacings(2, 2, "right")]
        assert got == ["L1-L2-R2-R1", "L1-R2-L2-R1"]

    def test_defective_counts(self):
        bt = cnt.b_table(8)
        for k, n in ((2, 1), (2, 3), (3, 4), (2, 4), (3, 5)):
            got = sum(1 for _ in enum_lacings(k, n, "non_self_crossing"))
            assert got == bt.value(k, n)

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_lacings(7, 6, "right"))

    def test_encode_decode(self):
        for l in enum_lacings(2, 3, "right"):
            assert Lacing.decode(l.encode()) == l

    def test_rejects_same_side_run(self):
        bad = Lacing(2, 2, (("L", 1), ("L", 2), ("R", 1), ("R", 2)))
        # L2's neighbours are L1 and R1 -- fine; R1 has L2 -- fine; but ends at R2
        bad.validate("non_self_crossing")  # this one is actually legal
        worse = Lacing(3, 1, (("L", 1), ("L", 2), ("L", 3), ("R", 1)))
        with pytest.raises(InvalidInput):
            worse.validate("non_self_crossing")

    def test_rejects_wrong_endpoints(self):
        bad = Lacing(2, 2, (("L", 2), ("L", 1), ("R", 2), ("R", 1)))
        with pytest.raises(InvalidInput):
            bad.validate("right")
        bad2 = Lacing(2, 2, (("L", 1), ("R", 1), ("L", 2), ("R", 2)))
        with pytest.raises(InvalidInput):
            bad2.validate("right")

    def test_rejects_crossing_in_noncrossing_mode(self):
        # L1->R1 then R1->L2 then L2->R2: fine; force a crossing instead
        crossing = Lacing(3, 3, (("L", 1), ("R", 2), ("L", 2), ("R", 1), ("L", 3), ("R", 3)))
        with pytest.raises(InvalidInput):
            crossing.validate("non_self_crossing")

    def test_rejects_missing_hole(self):
        with pytest.raises(InvalidInput):
            Lacing(2, 2, (("L", 1), ("R", 1), ("R", 2))).validate("right")


class TestStaircases:
    def test_eight_by_eight_example_present(self):
        target = Staircase(((2, 2), (2, 1), (1, 2), (1, 1), (2, 2)))
        assert any(s == target for s in enum_staircases(8, 8))

    def test_trivial(self):
        assert [s.encode() for s in enum_staircases(1, 1)] == ["H1,V1"]

    def test_two_one(self):
        got = list(enum_staircases(2, 1))
        assert [s.encode() for s in got] == ["H2,V1"]
        assert cnt.b_value(2, 1) == 1

    def test_count_agreement(self):
        bt = cnt.b_table(10)
        for s in range(11):
            for k in range(s + 1):
                got = list(enum_staircases(k, s - k))
                assert len(got) == bt.value(k, s - k)
                assert_sorted_unique(got)
                for st in got:
                    st.validate()

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_staircases(15, 14))

    def test_encode_decode(self):
        for s in enum_staircases(4, 5):
            assert Staircase.decode(s.encode()) == s

    def test_rejects_long_run(self):
        with pytest.raises(InvalidInput):
            Staircase(((3, 1),)).validate()


class TestStepPaths:
    def test_trivial(self):
        assert [p.encode() for p in enum_b_step_paths(1, 1)] == ["11"]

    def test_known_counts(self):
        assert sum(1 for _ in enum_b_step_paths(4, 4)) == 11
        assert sum(1 for _ in enum_b_step_paths(3, 4)) == 5

    def test_count_agreement(self):
        bt = cnt.b_table(10)
        for s in range(11):
            for k in range(s + 1):
                got = list(enum_b_step_paths(k, s - k))
                assert len(got) == bt.value(k, s - k)
                assert_sorted_unique(got)
                for p in got:
                    p.validate()

    def test_cutoff(self):
        with pytest.raises(InstanceTooLarge):
            next(enum_b_step_paths(15, 14))

    def test_encode_decode(self):
        for p in enum_b_step_paths(3, 4):
            assert StepPath.decode(p.encode()) == p

    def test_rejects_bad_step(self):
        with pytest.raises(InvalidInput):
            StepPath(((3, 1),)).validate()


class TestMutatedCorpus:
    """Single-field perturbations of valid objects must all be rejected."""

    def test_matching_cross_swap(self):
        count = 0
        for m in enum_matchings(3, 3):
            crosses = m.cross_pairs()
            if len(crosses) < 2:
                continue
            (u1, l1), (u2, l2) = crosses[0], crosses[1]
            others = [
                p
                for p in m.pairs
                if p not in ((("U", u1), ("L", l1)), (("U", u2), ("L", l2)))
            ]
            mutated = Matching(
                3, 3, tuple(others) + ((("U", u1), ("L", l2)), (("U", u2), ("L", l1)))
            )
            with pytest.raises(InvalidInput):
                mutated.validate()
            count += 1
        assert count > 0

    def test_matching_widened_segment(self):
        for m in enum_matchings(4, 2):
            for a, b in m.line_pairs("U"):
                if b + 1 <= 4 and not any(
                    ("U", b + 1) in pr for pr in m.pairs if pr[0][0] == pr[1][0] == "U"
                ):
                    pairs = tuple(p for p in m.pairs if p != (("U", a), ("U", b)))
                    mutated = Matching(4, 2, pairs + ((("U", a), ("U", b + 2)),))
                    with pytest.raises(InvalidInput):
                        mutated.validate()

    def test_closed_set_member_dropped(self):
        count = 0
        for c in enum_closed_sets(8):
            for upper in (v for v in c.members if v % 2 == 1):
                mutated = ClosedSet(8, c.members - {upper - 1})
                with pytest.raises(InvalidInput):
                    mutated.validate()
                count += 1
        assert count > 0

    def test_sum012_digit_flip(self):
        count = 0
        for s in enum_012(4, 4):
            for i in range(len(s.summands) - 1):
                if s.summands[i] == 2 and s.summands[i + 1] != 0:
                    digits = list(s.summands)
                    digits[i + 1] = 0
                    with pytest.raises(InvalidInput):
                        Sum012(tuple(digits)).validate()
                    count += 1
        assert count > 0

    def test_weighted_step_flip(self):
        count = 0
        for w in enum_weighted_paths(4):
            if "U" in w.steps:
                with pytest.raises(InvalidInput):
                    WeightedPath(w.steps.replace("U", "C", 1)).validate()
                count += 1
        assert count > 0

    def test_chord_arc_shift(self):
        count = 0
        for c in enum_chords(5):
            for i, j in c.inner:
                mutated = ChordConfig(5, tuple(a for a in c.inner if a != (i, j)) + ((i, i + 1),), c.cross)
                with pytest.raises(InvalidInput):
                    mutated.validate()
                count += 1
        assert count > 0

    def test_domino_tile_flip(self):
        count = 0
        for d in enum_domino_pairs(3, 3):
            if "V" in d.left and "H" in d.left:
                mutated = DominoPair(3, 3, d.left.replace("V", "H", 1), d.right)
                with pytest.raises(InvalidInput):
                    mutated.validate()
                count += 1
        assert count > 0

    def test_staircase_run_stretch(self):
        for st in enum_staircases(3, 3):
            h, v = st.runs[0]
            mutated = Staircase(((h + 2, v),) + st.runs[1:])
            with pytest.raises(InvalidInput):
                mutated.validate()
