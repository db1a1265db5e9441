from __future__ import annotations

import random

import pytest

from mtwer.errors import MissingTimes
from mtwer.levenshtein import UNBOUNDED
from mtwer.seglst import Segment, TimestampMode, validate
from mtwer.speaker_attributed import cp_wer, da_wer, der

from sample_session import two_stream_hyp, two_stream_ref


def seg(label, words, begin=None, end=None, session="s"):
    return Segment(session_id=session, label=label, words=words, begin_time=begin, end_time=end)


class TestCpWer:
    def test_golden_two_stream_session(self):
        r = cp_wer(two_stream_ref(), two_stream_hyp())
        c = r.counts
        assert (c.insertions, c.deletions, c.substitutions) == (2, 3, 2)
        assert c.ref_length == 8
        assert r.error_rate == pytest.approx(0.875)

    def test_golden_mapping(self):
        r = cp_wer(two_stream_ref(), two_stream_hyp())
        assert r.mapping.ref_to_hyp() == {"spk1": "s2", "spk2": "s1", "spk3": None}

    def test_bijective_relabeling_invariance(self):
        ref = two_stream_ref()
        hyp = two_stream_hyp()
        renamed = validate(
            [
                Segment(s.session_id, {"s1": "zz", "s2": "aa"}[s.label], s.words, s.begin_time, s.end_time)
                for s in hyp
            ]
        )
        assert cp_wer(ref, hyp).counts == cp_wer(ref, renamed).counts

    def test_perfect_hypothesis_under_renaming(self):
        ref = two_stream_ref()
        renamed = validate(
            [
                Segment(s.session_id, "x" + s.label, s.words, s.begin_time, s.end_time)
                for s in ref
            ]
        )
        r = cp_wer(ref, renamed)
        assert r.counts.errors == 0
        assert r.counts.correct == 8

    def test_surplus_stream_maps_to_empty(self):
        ref = validate([seg("spk", "a b")])
        hyp = validate([seg("s1", "a b"), seg("s2", "x")])
        r = cp_wer(ref, hyp)
        c = r.counts
        assert (c.insertions, c.deletions, c.substitutions) == (1, 0, 0)
        assert (None, "s2") in r.mapping.pairs

    def test_split_merge_invariance(self):
        ref = two_stream_ref()
        hyp = two_stream_hyp()
        base = cp_wer(ref, hyp).counts
        split = []
        for s in hyp:
            words = s.word_list()
            if len(words) > 1:
                mid = (s.begin_time + s.end_time) / 2
                split.append(seg(s.label, " ".join(words[:1]), s.begin_time, mid, s.session_id))
                split.append(seg(s.label, " ".join(words[1:]), mid, s.end_time, s.session_id))
            else:
                split.append(s)
        assert cp_wer(ref, validate(split)).counts == base

    def test_tcp_upper_bounds_cp_and_is_monotone_in_collar(self):
        ref = two_stream_ref()
        hyp = two_stream_hyp()
        cp = cp_wer(ref, hyp).distance
        distances = [cp_wer(ref, hyp, collar=c).distance for c in [0, 1, 2, 5, UNBOUNDED]]
        assert all(d >= cp for d in distances)
        assert distances == sorted(distances, reverse=True)
        assert distances[-1] == cp

    def test_tcp_needs_times(self):
        ref = validate([seg("a", "x y")])
        hyp = validate([seg("b", "x y")])
        with pytest.raises(MissingTimes):
            cp_wer(ref, hyp, collar=5)

    def test_tcp_single_mode_applies_to_both_sides(self):
        ref = two_stream_ref()
        hyp = two_stream_hyp()
        r = cp_wer(ref, hyp, collar=5, ts_mode=TimestampMode.SEGMENT_INTERVAL)
        assert r.counts.ref_length == 8

    def test_empty_both_sides(self):
        r = cp_wer(validate([]), validate([]))
        assert r.counts.errors == 0
        assert r.error_rate is None


class TestDer:
    def test_identical_timeline_scores_zero(self):
        ref = validate([seg("a", "x", 0, 10)])
        hyp = validate([seg("1", "y z", 0, 10)])
        r = der(ref, hyp)
        assert r.error_rate == 0

    def test_missed_speech(self):
        ref = validate([seg("a", "x", 0, 10)])
        hyp = validate([seg("1", "x", 0, 5)])
        r = der(ref, hyp)
        assert r.counts.missed == pytest.approx(5.0)
        assert r.error_rate == pytest.approx(0.5)

    def test_crossed_mapping_found(self):
        ref = validate([seg("a", "x", 0, 10), seg("b", "y", 20, 30)])
        hyp = validate([seg("1", "x", 20, 30), seg("2", "y", 0, 10)])
        r = der(ref, hyp)
        assert r.error_rate == 0
        assert r.mapping.ref_to_hyp() == {"a": "2", "b": "1"}

    def test_overlapping_segments_merge(self):
        ref = validate([seg("a", "x", 0, 6), seg("a", "y", 4, 10)])
        hyp = validate([seg("1", "x", 0, 10)])
        assert der(ref, hyp).error_rate == 0

    def test_missing_times_raise(self):
        with pytest.raises(MissingTimes):
            der(validate([seg("a", "x")]), validate([seg("1", "x", 0, 1)]))


class TestDaWer:
    def test_perfect_hypothesis(self):
        ref = two_stream_ref()
        assert da_wer(ref, ref).counts.errors == 0

    def test_matches_cp_when_activity_is_disjoint(self):
        # Clearly separated speakers: the activity-optimal mapping is also
        # the word-optimal one, so both metrics agree.
        ref = validate([seg("a", "u v", 0, 10), seg("b", "w x", 100, 110)])
        hyp = validate([seg("1", "u v", 0, 10), seg("2", "w z", 100, 110)])
        da = da_wer(ref, hyp)
        cp = cp_wer(ref, hyp)
        assert da.counts == cp.counts
        assert set(da.mapping.pairs) == set(cp.mapping.pairs)

    def test_fully_overlapped_speakers_expose_mapping_weakness(self):
        # Both speakers are active over the same span; the activity-based
        # mapping falls back to the deterministic tie-break while cpWER
        # finds the crossed word mapping.
        ref = validate([seg("r1", "a a", 0, 10), seg("r2", "b b", 0, 10)])
        hyp = validate([seg("h1", "b b", 0, 10), seg("h2", "a a", 0, 10)])
        da = da_wer(ref, hyp)
        assert da.counts.substitutions == 4
        assert da.mapping.ref_to_hyp() == {"r1": "h1", "r2": "h2"}
        assert cp_wer(ref, hyp).counts.errors == 0

    def test_mapping_ignores_words(self):
        rng = random.Random(5)
        ref = validate(
            [seg("a", "u v w", 0, 5), seg("b", "x y", 6, 10), seg("a", "z", 11, 12)]
        )
        hyp_segments = [seg("1", "u v w", 0, 5), seg("2", "x y", 6, 10), seg("1", "z", 11, 12)]
        base = da_wer(ref, validate(hyp_segments)).mapping
        for _ in range(10):
            scrambled = [
                Segment(
                    s.session_id,
                    s.label,
                    " ".join(rng.choice("pqrs") for _ in s.word_list()),
                    s.begin_time,
                    s.end_time,
                )
                for s in hyp_segments
            ]
            assert da_wer(ref, validate(scrambled)).mapping == base
