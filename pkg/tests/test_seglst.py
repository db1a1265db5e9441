from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mtwer.errors import MissingTimes, MixedSessionIds, NegativeDuration
from mtwer.seglst import (
    Segment,
    SegLst,
    TimestampMode,
    explode_to_word_level,
    pseudo_word_timestamps,
    tokenize,
    validate,
)


def seg(words, label="spk1", begin=None, end=None, session="s1"):
    return Segment(session_id=session, label=label, words=words, begin_time=begin, end_time=end)


class TestValidate:
    def test_whitespace_normalized(self):
        out = validate([seg("  a  b ", begin=0, end=1)])
        assert out.segments[0].words == "a b"

    def test_sorted_by_begin_time(self):
        out = validate([seg("x", begin=5, end=6), seg("y", begin=1, end=2)])
        assert [s.words for s in out] == ["y", "x"]

    def test_negative_duration_rejected(self):
        with pytest.raises(NegativeDuration):
            validate([seg("x", begin=2, end=1)])

    def test_mixed_sessions_rejected(self):
        with pytest.raises(MixedSessionIds):
            validate([seg("a", session="s1"), seg("b", session="s2")])

    def test_sort_is_stable_on_ties(self):
        segments = [seg("a", begin=1, end=2), seg("b", begin=1, end=2), seg("c", begin=0, end=1)]
        out = validate(segments)
        assert [s.words for s in out] == ["c", "a", "b"]

    def test_idempotent(self):
        once = validate([seg(" a  b", begin=3, end=4), seg("c", begin=0, end=1)])
        assert validate(once) == once

    def test_untimed_segments_keep_order(self):
        out = validate([seg("a"), seg("b"), seg("c")])
        assert [s.words for s in out] == ["a", "b", "c"]


class TestTokenize:
    @pytest.mark.parametrize(
        "words,expected",
        [("A B C", ["A", "B", "C"]), ("", []), ("hello", ["hello"])],
    )
    def test_split(self, words, expected):
        assert tokenize(seg(words)) == expected


class TestPseudoWordTimestamps:
    def test_character_based_proportional(self):
        # "ab" carries 2 of 3 characters, so it gets 2/3 of the 6 s segment.
        tokens = pseudo_word_timestamps(seg("ab c", begin=0, end=6), TimestampMode.CHARACTER_BASED)
        assert [(t.word, t.begin_time, t.end_time) for t in tokens] == [
            ("ab", 0.0, 4.0),
            ("c", 4.0, 6.0),
        ]

    def test_character_based_points_are_midpoints(self):
        tokens = pseudo_word_timestamps(
            seg("ab c", begin=0, end=6), TimestampMode.CHARACTER_BASED_POINTS
        )
        assert [(t.word, t.begin_time, t.end_time) for t in tokens] == [
            ("ab", 2.0, 2.0),
            ("c", 5.0, 5.0),
        ]

    def test_single_word_tiles_whole_segment(self):
        tokens = pseudo_word_timestamps(seg("x", begin=3, end=7), TimestampMode.CHARACTER_BASED)
        assert [(t.word, t.begin_time, t.end_time) for t in tokens] == [("x", 3.0, 7.0)]

    def test_segment_interval_copies_times(self):
        tokens = pseudo_word_timestamps(seg("a b", begin=1, end=3), TimestampMode.SEGMENT_INTERVAL)
        assert all((t.begin_time, t.end_time) == (1, 3) for t in tokens)

    def test_missing_times_raise(self):
        with pytest.raises(MissingTimes):
            pseudo_word_timestamps(seg("a b"), TimestampMode.CHARACTER_BASED)

    @given(
        words=st.lists(st.text(alphabet="abcdef", min_size=1, max_size=8), min_size=1, max_size=8),
        begin=st.floats(min_value=0, max_value=1e4),
        duration=st.floats(min_value=0, max_value=1e4),
    )
    def test_intervals_tile_segment(self, words, begin, duration):
        segment = seg(" ".join(words), begin=begin, end=begin + duration)
        tokens = pseudo_word_timestamps(segment, TimestampMode.CHARACTER_BASED)
        assert tokens[0].begin_time == segment.begin_time
        assert tokens[-1].end_time == segment.end_time
        for left, right in zip(tokens, tokens[1:]):
            assert left.end_time == right.begin_time
        total = sum(t.end_time - t.begin_time for t in tokens)
        assert total == pytest.approx(duration, abs=1e-9)


class TestExplodeToWordLevel:
    def test_equal_characters_split_interval_in_half(self):
        out = explode_to_word_level(
            validate([seg("A B", begin=0, end=2)]), TimestampMode.CHARACTER_BASED
        )
        assert [(s.words, s.begin_time, s.end_time) for s in out] == [
            ("A", 0.0, 1.0),
            ("B", 1.0, 2.0),
        ]

    def test_empty_segment_produces_nothing(self):
        out = explode_to_word_level(
            validate([seg("", begin=0, end=1)]), TimestampMode.CHARACTER_BASED
        )
        assert len(out) == 0

    def test_labels_and_session_inherited(self):
        out = explode_to_word_level(
            validate([seg("a b", label="spkX", begin=0, end=2)]),
            TimestampMode.CHARACTER_BASED,
        )
        assert all(s.label == "spkX" and s.session_id == "s1" for s in out)

    @given(
        st.lists(
            st.tuples(
                st.lists(st.text(alphabet="abc", min_size=1, max_size=4), max_size=4),
                st.floats(min_value=0, max_value=100),
                st.floats(min_value=0, max_value=10),
            ),
            max_size=5,
        )
    )
    def test_word_multiset_preserved(self, raw):
        segments = [
            seg(" ".join(words), begin=begin, end=begin + dur) for words, begin, dur in raw
        ]
        seglst = validate(segments)
        for mode in TimestampMode:
            exploded = explode_to_word_level(seglst, mode)
            assert sorted(s.words for s in exploded) == sorted(
                w for s in seglst for w in s.word_list()
            )


def test_seglst_helpers():
    lst = validate([seg("a b", label="x", begin=0, end=1), seg("c", label="y", begin=1, end=2)])
    assert lst.session_id == "s1"
    assert lst.labels() == ["x", "y"]
    assert lst.word_count() == 3
    assert [s.words for s in lst.by_label("x")] == ["a b"]
    assert SegLst().session_id is None
