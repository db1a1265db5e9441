from __future__ import annotations

import itertools
import math
import random

import pytest

from mtwer.errors import ComplexityGuardExceeded, TooLarge
from mtwer.levenshtein import UNBOUNDED, lev, tc_lev
from mtwer.seglst import Segment, TimestampMode, explode_to_word_level, validate
from mtwer.speaker_attributed import cp_wer
from mtwer.stream_assignment import (
    brute_force_oracle,
    di_cp_wer,
    mimo_wer,
    orc_wer,
)

from sample_session import GOLDEN, two_stream_hyp, two_stream_ref


def seg(label, words, begin=None, end=None, session="s"):
    return Segment(session_id=session, label=label, words=words, begin_time=begin, end_time=end)


def random_instance(rng, max_utts=5, max_ref_speakers=3, max_streams=3, max_words=3, vocab=3):
    """A small random timed (ref, hyp) pair for oracle comparisons."""
    words = [f"w{i}" for i in range(vocab)]

    def make(side, n_labels, n_segs):
        segments = []
        t = 0.0
        for _ in range(n_segs):
            t += rng.uniform(0, 2)
            dur = rng.uniform(0.5, 3)
            content = " ".join(rng.choice(words) for _ in range(rng.randint(0, max_words)))
            segments.append(
                seg(f"{side}{rng.randrange(n_labels)}", content, round(t, 3), round(t + dur, 3))
            )
            t += dur * rng.uniform(0, 1)
        return validate(segments)

    ref = make("r", rng.randint(1, max_ref_speakers), rng.randint(0, max_utts))
    hyp = make("h", rng.randint(1, max_streams), rng.randint(0, max_utts))
    return ref, hyp


def rescore(result, ref, hyp, mode, collar=UNBOUNDED, ts_mode=None):
    """Re-score a returned assignment directly and compare to the distance."""
    from mtwer.seglst import resolve_ts_modes, segment_tokens

    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    timed = not math.isinf(collar)
    if mode == "di_cp":
        items, item_mode = list(hyp), hyp_mode
        targets = {
            label: [t for s in ref.by_label(label) for t in segment_tokens(s, ref_mode, timed)]
            for label in ref.labels()
        }
    else:
        items, item_mode = list(ref), ref_mode
        targets = {
            label: [t for s in hyp.by_label(label) for t in segment_tokens(s, hyp_mode, timed)]
            for label in hyp.labels()
        }
    if not targets:
        targets = {None: []}
    total = 0
    for label, target_tokens in targets.items():
        concat = []
        for i in result.assignment.order:
            if result.assignment.labels[i] == label:
                concat.extend(segment_tokens(items[i], item_mode, timed))
        if timed:
            total += tc_lev(concat, target_tokens, collar, require_sorted=False).distance
        else:
            total += lev([t.word for t in concat], [t.word for t in target_tokens]).distance
    assert total == result.distance
    return total


class TestGoldenSession:
    def test_orc(self):
        r = orc_wer(two_stream_ref(), two_stream_hyp())
        c = r.counts
        assert (c.insertions, c.deletions, c.substitutions) == GOLDEN["orc"]
        assert r.error_rate == pytest.approx(0.5)

    def test_mimo(self):
        r = mimo_wer(two_stream_ref(), two_stream_hyp())
        c = r.counts
        assert (c.insertions, c.deletions, c.substitutions) == GOLDEN["mimo"]
        assert r.error_rate == pytest.approx(0.375)

    def test_di_cp(self):
        r = di_cp_wer(two_stream_ref(), two_stream_hyp())
        c = r.counts
        assert (c.insertions, c.deletions, c.substitutions) == GOLDEN["di_cp"]
        assert r.error_rate == pytest.approx(0.25)

    def test_word_level_orc(self):
        ref = explode_to_word_level(two_stream_ref(), TimestampMode.CHARACTER_BASED)
        hyp = explode_to_word_level(two_stream_hyp(), TimestampMode.CHARACTER_BASED)
        r = orc_wer(ref, hyp)
        c = r.counts
        assert (c.insertions, c.deletions, c.substitutions) == GOLDEN["wl_orc"]
        assert r.error_rate == pytest.approx(0.25)

    def test_word_level_di_cp(self):
        ref = explode_to_word_level(two_stream_ref(), TimestampMode.CHARACTER_BASED)
        hyp = explode_to_word_level(two_stream_hyp(), TimestampMode.CHARACTER_BASED)
        r = di_cp_wer(ref, hyp)
        c = r.counts
        assert (c.insertions, c.deletions, c.substitutions) == GOLDEN["wl_di_cp"]
        assert r.error_rate == pytest.approx(0.125)

    def test_oracle_agrees_on_golden_session(self):
        ref, hyp = two_stream_ref(), two_stream_hyp()
        assert brute_force_oracle(ref, hyp, "orc") == 4
        assert brute_force_oracle(ref, hyp, "mimo") == 3
        assert brute_force_oracle(ref, hyp, "di_cp") == 2


class TestTrivialCases:
    def test_single_stream_concatenation_matches(self):
        ref = validate([seg("a", "x y", 0, 2), seg("b", "z", 2, 3)])
        hyp = validate([seg("s", "x y z", 0, 3)])
        assert orc_wer(ref, hyp).distance == 0

    def test_empty_hypothesis_all_deletions(self):
        ref = validate([seg("a", "x y", 0, 2), seg("b", "z", 2, 3)])
        hyp = validate([])
        for mode in ("orc", "mimo", "di_cp"):
            assert brute_force_oracle(ref, hyp, mode) == 3
        r = orc_wer(ref, hyp)
        assert r.distance == 3 and r.counts.deletions == 3
        assert di_cp_wer(ref, hyp).counts.deletions == 3

    def test_empty_reference(self):
        ref = validate([])
        hyp = validate([seg("s", "x y", 0, 2)])
        r = orc_wer(ref, hyp)
        assert r.distance == 2 and r.counts.insertions == 2
        assert r.counts.ref_length == 0

    def test_oracle_too_large(self):
        ref = validate([seg("a", "x", i, i + 1) for i in range(7)])
        hyp = validate([seg("s", "x", 0, 1)])
        with pytest.raises(TooLarge):
            brute_force_oracle(ref, hyp, "orc")


class TestMimoValidity:
    def test_circular_assignment_is_excluded(self):
        # Speaker 1 says "a" then "b", speaker 2 says "x" then "y". The
        # hypothesis puts "b x" on one stream and "y a" on the other;
        # matching everything would need a before b before x before y
        # before a, which is circular, so a perfect score is impossible.
        ref = validate(
            [
                seg("spk1", "a", 0, 1),
                seg("spk1", "b", 1, 2),
                seg("spk2", "x", 0.5, 1.5),
                seg("spk2", "y", 1.5, 2.5),
            ]
        )
        hyp = validate([seg("s1", "b x", 0, 2), seg("s2", "y a", 0, 2)])
        oracle = brute_force_oracle(ref, hyp, "mimo")
        assert oracle > 0
        result = mimo_wer(ref, hyp)
        assert result.distance == oracle
        # And the enumerated search space never contains the circular
        # per-stream sequences ("b x", "y a").
        from mtwer.stream_assignment import _interleavings

        orderings = list(_interleavings([[0, 1], [2, 3]]))
        words = {0: "a", 1: "b", 2: "x", 3: "y"}
        for ordering in orderings:
            emitted = [i for _, i in ordering]
            for labels in itertools.product(["s1", "s2"], repeat=4):
                s1 = " ".join(words[i] for i in emitted if labels[i] == "s1")
                s2 = " ".join(words[i] for i in emitted if labels[i] == "s2")
                assert not (s1 == "b x" and s2 == "y a")

    def test_mimo_reorders_across_speakers(self):
        # Speaker order must be kept, but different speakers may be
        # emitted out of global order.
        ref = validate([seg("p", "a", 0, 1), seg("q", "b", 1, 2), seg("p", "c", 2, 3)])
        hyp = validate([seg("s1", "a c b", 0, 3)])
        assert orc_wer(ref, hyp).distance == 2
        assert mimo_wer(ref, hyp).distance == 0


class TestOracleEquivalence:
    N = 120

    @pytest.mark.parametrize("mode", ["orc", "mimo", "di_cp"])
    def test_randomized(self, mode):
        fn = {"orc": orc_wer, "mimo": mimo_wer, "di_cp": di_cp_wer}[mode]
        rng = random.Random(hash(mode) % 2**32)
        for trial in range(self.N):
            ref, hyp = random_instance(rng)
            collar = rng.choice([UNBOUNDED, UNBOUNDED, 1.0, 3.0])
            want = brute_force_oracle(ref, hyp, mode, collar=collar)
            got = fn(ref, hyp, collar=collar)
            assert got.distance == want, (mode, trial, collar, ref, hyp)
            rescore(got, ref, hyp, mode, collar=collar)

    def test_exhaustive_single_word_utterances(self):
        # Every reference of <= 3 one-word utterances over {a, b} with all
        # speaker patterns, against every 2-stream hypothesis with <= 2
        # words per stream.
        stream_contents = ["", "a", "b", "a a", "a b", "b a", "b b"]
        checked = 0
        for n in range(0, 4):
            for ref_words in itertools.product("ab", repeat=n):
                for speakers in itertools.product((0, 1), repeat=n):
                    ref = validate(
                        [
                            seg(f"spk{speakers[i]}", ref_words[i], i, i + 1)
                            for i in range(n)
                        ]
                    )
                    for s1, s2 in itertools.combinations_with_replacement(stream_contents, 2):
                        hyp = validate([seg("s1", s1, 0, n + 1), seg("s2", s2, 0, n + 1)])
                        for mode, fn in (("orc", orc_wer), ("mimo", mimo_wer), ("di_cp", di_cp_wer)):
                            want = brute_force_oracle(ref, hyp, mode)
                            got = fn(ref, hyp)
                            assert got.distance == want, (mode, ref, hyp)
                        checked += 1
        assert checked > 1000


class TestOrderingInvariants:
    def test_mimo_at_most_orc_and_di_cp_at_most_cp(self):
        rng = random.Random(77)
        for _ in range(150):
            ref, hyp = random_instance(rng)
            orc = orc_wer(ref, hyp).distance
            mimo = mimo_wer(ref, hyp).distance
            di = di_cp_wer(ref, hyp).distance
            cp = cp_wer(ref, hyp).distance
            assert mimo <= orc
            assert di <= cp

    def test_tc_nonincreasing_in_collar_and_unbounded_limit(self):
        rng = random.Random(78)
        collars = [0.5, 2.0, 10.0, UNBOUNDED]
        for _ in range(40):
            ref, hyp = random_instance(rng, max_utts=4)
            for fn in (orc_wer, mimo_wer, di_cp_wer):
                distances = [fn(ref, hyp, collar=c).distance for c in collars]
                assert distances == sorted(distances, reverse=True)
                assert distances[-1] == fn(ref, hyp).distance


class TestAssignmentStructure:
    def test_orc_assignment_preserves_global_order(self):
        rng = random.Random(5)
        for _ in range(50):
            ref, hyp = random_instance(rng)
            result = orc_wer(ref, hyp)
            assert result.assignment.order == tuple(range(len(ref)))
            assert len(result.assignment.labels) == len(ref)
            stream_labels = set(hyp.labels()) or {None}
            assert set(result.assignment.labels) <= stream_labels

    def test_mimo_assignment_keeps_speaker_order(self):
        rng = random.Random(6)
        for _ in range(50):
            ref, hyp = random_instance(rng)
            result = mimo_wer(ref, hyp)
            order = result.assignment.order
            assert sorted(order) == list(range(len(ref)))
            segments = list(ref)
            for label in ref.labels():
                positions = [order.index(i) for i, s in enumerate(segments) if s.label == label]
                assert positions == sorted(positions)

    def test_di_cp_ignores_hypothesis_labels(self):
        rng = random.Random(7)
        for _ in range(40):
            ref, hyp = random_instance(rng)
            base = di_cp_wer(ref, hyp).distance
            relabeled = validate(
                [
                    Segment(s.session_id, f"x{rng.randrange(4)}", s.words, s.begin_time, s.end_time)
                    for s in hyp
                ]
            )
            assert di_cp_wer(ref, relabeled).distance == base

    def test_deterministic_tie_break(self):
        # Two identical streams: the lexicographically smaller label wins.
        ref = validate([seg("a", "x y", 0, 2)])
        hyp = validate([seg("s2", "x y", 0, 2), seg("s1", "x y", 0, 2)])
        result = orc_wer(ref, hyp)
        assert result.assignment.labels == ("s1",)


def test_complexity_guard_trips_on_large_unconstrained():
    words = " ".join(f"w{i}" for i in range(40))
    ref = validate([seg("spk", words, 100 * i, 100 * i + 40) for i in range(30)])
    hyp = validate(
        [seg(f"s{i % 2}", words, 100 * i, 100 * i + 40) for i in range(30)]
    )
    with pytest.raises(ComplexityGuardExceeded):
        orc_wer(ref, hyp, cell_budget=10**6)
    # The time constraint prunes the space below the same budget.
    assert orc_wer(ref, hyp, collar=5, cell_budget=10**6).distance == 0
