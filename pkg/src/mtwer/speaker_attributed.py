"""Speaker-attributed metrics: cpWER / tcpWER, DER, and DA-WER.

These metrics assume the hypothesis groups its output by (estimated)
speaker and resolve a one-to-one mapping between reference speakers and
hypothesis streams. cpWER picks the mapping that minimizes the word
error; DA-WER picks the mapping that minimizes the diarization error
and then scores words under it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .assignment import solve_assignment
from .errors import MissingTimes
from .levenshtein import (
    UNBOUNDED,
    AlignmentTrace,
    ErrorCounts,
    LevResult,
    lev,
    tc_lev,
)
from .seglst import SegLst, TsModeArg, WordToken, resolve_ts_modes, segment_tokens, validate

PairKey = tuple[str | None, str | None]


@dataclass(frozen=True)
class SpeakerMapping:
    """One-to-one pairs of (reference label, hypothesis label).

    A ``None`` entry stands for the empty dummy counterpart of an
    unmatched label.
    """

    pairs: tuple[PairKey, ...]

    def ref_to_hyp(self) -> dict[str, str | None]:
        return {r: h for r, h in self.pairs if r is not None}

    def hyp_to_ref(self) -> dict[str, str | None]:
        return {h: r for r, h in self.pairs if h is not None}


@dataclass(frozen=True)
class CpResult:
    counts: ErrorCounts
    mapping: SpeakerMapping
    traces: Mapping[PairKey, AlignmentTrace]
    collar: float = UNBOUNDED

    @property
    def distance(self) -> int:
        return self.counts.errors

    @property
    def error_rate(self) -> float | None:
        return self.counts.error_rate


def label_tokens(
    seglst: SegLst, mode, timed: bool
) -> dict[str, list[WordToken]]:
    """Concatenated word tokens per label, in canonical segment order."""
    out: dict[str, list[WordToken]] = {label: [] for label in seglst.labels()}
    for segment in seglst:
        out[segment.label].extend(segment_tokens(segment, mode, timed))
    return out


def _pair_result(
    ref_tokens: Sequence[WordToken], hyp_tokens: Sequence[WordToken], collar: float
) -> LevResult:
    if math.isinf(collar):
        return lev([t.word for t in ref_tokens], [t.word for t in hyp_tokens])
    return tc_lev(ref_tokens, hyp_tokens, collar, require_sorted=False)


def cp_wer(
    ref: SegLst,
    hyp: SegLst,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
) -> CpResult:
    """Concatenated minimum-permutation WER; tcpWER with a finite collar.

    Each label's segments are concatenated in canonical order; the
    returned mapping minimizes the summed (time-constrained) distance
    over all one-to-one label mappings, with empty dummies padding
    unequal label counts. Unmatched reference speakers count as
    deletions, unmatched hypothesis streams as insertions.
    """
    ref = validate(ref)
    hyp = validate(hyp)
    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    timed = not math.isinf(collar)

    ref_tokens = label_tokens(ref, ref_mode, timed)
    hyp_tokens = label_tokens(hyp, hyp_mode, timed)
    ref_labels = sorted(ref_tokens)
    hyp_labels = sorted(hyp_tokens)
    size = max(len(ref_labels), len(hyp_labels))
    rows: list[str | None] = ref_labels + [None] * (size - len(ref_labels))
    cols: list[str | None] = hyp_labels + [None] * (size - len(hyp_labels))

    cost = np.zeros((size, size), dtype=np.float64)
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            if r is None and c is None:
                continue
            r_toks = ref_tokens[r] if r is not None else []
            h_toks = hyp_tokens[c] if c is not None else []
            cost[i, j] = _pair_result(r_toks, h_toks, collar).distance

    pairs = []
    traces: dict[PairKey, AlignmentTrace] = {}
    counts = ErrorCounts()
    for i, j in solve_assignment(cost):
        r, c = rows[i], cols[j]
        if r is None and c is None:
            continue
        result = _pair_result(
            ref_tokens[r] if r is not None else [],
            hyp_tokens[c] if c is not None else [],
            collar,
        )
        pairs.append((r, c))
        traces[(r, c)] = result.trace
        counts = counts + result.counts
    return CpResult(counts, SpeakerMapping(tuple(pairs)), traces, collar)


# --- Diarization error rate -------------------------------------------------

Timeline = list[tuple[float, float]]


@dataclass(frozen=True)
class DerCounts:
    missed: float = 0.0
    false_alarm: float = 0.0
    confusion: float = 0.0
    total_reference_activity: float = 0.0

    @property
    def error_rate(self) -> float | None:
        if self.total_reference_activity == 0:
            return None
        return (self.missed + self.false_alarm + self.confusion) / self.total_reference_activity


@dataclass(frozen=True)
class DerResult:
    counts: DerCounts
    mapping: SpeakerMapping

    @property
    def error_rate(self) -> float | None:
        return self.counts.error_rate


def _activity_timeline(seglst: SegLst, label: str) -> Timeline:
    intervals = []
    for segment in seglst.by_label(label):
        if not segment.has_times:
            raise MissingTimes(f"diarization scoring needs times, segment {segment!r} has none")
        intervals.append((float(segment.begin_time), float(segment.end_time)))
    intervals.sort()
    merged: Timeline = []
    for begin, end in intervals:
        if merged and begin <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], end))
        else:
            merged.append((begin, end))
    return merged


def _duration(timeline: Timeline) -> float:
    return sum(end - begin for begin, end in timeline)


def _overlap_duration(a: Timeline, b: Timeline) -> float:
    total = 0.0
    i = j = 0
    while i < len(a) and j < len(b):
        lo = max(a[i][0], b[j][0])
        hi = min(a[i][1], b[j][1])
        if hi > lo:
            total += hi - lo
        if a[i][1] <= b[j][1]:
            i += 1
        else:
            j += 1
    return total


def der(ref: SegLst, hyp: SegLst) -> DerResult:
    """Diarization error rate over per-label activity timelines.

    Per-pair cost is the duration of the symmetric difference of the two
    timelines; the mapping minimizes the total. Confusion time is zero
    under this one-to-one timeline mapping; wrongly attributed activity
    shows up as missed plus false-alarm time. No collar is applied.
    """
    ref = validate(ref)
    hyp = validate(hyp)
    ref_labels = ref.labels()
    hyp_labels = hyp.labels()
    ref_tl = {label: _activity_timeline(ref, label) for label in ref_labels}
    hyp_tl = {label: _activity_timeline(hyp, label) for label in hyp_labels}

    size = max(len(ref_labels), len(hyp_labels))
    rows: list[str | None] = ref_labels + [None] * (size - len(ref_labels))
    cols: list[str | None] = hyp_labels + [None] * (size - len(hyp_labels))
    cost = np.zeros((size, size), dtype=np.float64)
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            a = ref_tl[r] if r is not None else []
            b = hyp_tl[c] if c is not None else []
            cost[i, j] = _duration(a) + _duration(b) - 2 * _overlap_duration(a, b)

    missed = 0.0
    false_alarm = 0.0
    pairs = []
    for i, j in solve_assignment(cost):
        r, c = rows[i], cols[j]
        if r is None and c is None:
            continue
        pairs.append((r, c))
        a = ref_tl[r] if r is not None else []
        b = hyp_tl[c] if c is not None else []
        overlap = _overlap_duration(a, b)
        missed += _duration(a) - overlap
        false_alarm += _duration(b) - overlap
    counts = DerCounts(
        missed=missed,
        false_alarm=false_alarm,
        confusion=0.0,
        total_reference_activity=sum(_duration(tl) for tl in ref_tl.values()),
    )
    return DerResult(counts, SpeakerMapping(tuple(pairs)))


@dataclass(frozen=True)
class DaResult:
    counts: ErrorCounts
    mapping: SpeakerMapping
    traces: Mapping[PairKey, AlignmentTrace]
    der_counts: DerCounts

    @property
    def distance(self) -> int:
        return self.counts.errors

    @property
    def error_rate(self) -> float | None:
        return self.counts.error_rate


def da_wer(ref: SegLst, hyp: SegLst) -> DaResult:
    """Diarization-assigned WER.

    The speaker mapping is the one chosen by :func:`der` (it depends on
    activity only, not on the transcription); words are then scored
    under that fixed mapping with the plain distance.
    """
    ref = validate(ref)
    hyp = validate(hyp)
    diarization = der(ref, hyp)
    ref_words = {
        label: [w for s in ref.by_label(label) for w in s.word_list()] for label in ref.labels()
    }
    hyp_words = {
        label: [w for s in hyp.by_label(label) for w in s.word_list()] for label in hyp.labels()
    }
    counts = ErrorCounts()
    traces: dict[PairKey, AlignmentTrace] = {}
    for r, c in diarization.mapping.pairs:
        result = lev(
            ref_words[r] if r is not None else [],
            hyp_words[c] if c is not None else [],
        )
        counts = counts + result.counts
        traces[(r, c)] = result.trace
    return DaResult(counts, diarization.mapping, traces, diarization.counts)
