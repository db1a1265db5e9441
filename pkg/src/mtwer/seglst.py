"""Transcript data model.

A transcript is a list of segments, where each segment is a contiguous
single-speaker region with a space-separated word string, a speaker (or
system output stream) label, and optional begin/end times in seconds.
The same representation is used for references and hypotheses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Iterator, Mapping

from .errors import MissingTimes, MixedSessionIds, NegativeDuration


class TimestampMode(enum.Enum):
    """How word-level timestamps are derived from segment-level times.

    ``SEGMENT_INTERVAL`` gives every word the full segment interval.
    ``CHARACTER_BASED`` splits the segment into per-word sub-intervals
    whose lengths are proportional to the word character counts, as a
    rough proxy for pronunciation length.
    ``CHARACTER_BASED_POINTS`` collapses each such sub-interval to its
    center point. Recommended for the hypothesis side: interval-valued
    hypothesis words would let a system stretch segment boundaries to
    game a time-constrained metric.
    """

    SEGMENT_INTERVAL = "segment"
    CHARACTER_BASED = "character_based"
    CHARACTER_BASED_POINTS = "character_based_points"


@dataclass(frozen=True)
class Segment:
    """One contiguous speech region of a single speaker."""

    session_id: str
    label: str
    words: str
    begin_time: float | None = None
    end_time: float | None = None
    # Unknown file-format keys, preserved for lossless round-trips.
    extra: Mapping[str, Any] = field(default_factory=dict)

    def word_list(self) -> list[str]:
        return self.words.split()

    @property
    def has_times(self) -> bool:
        return self.begin_time is not None and self.end_time is not None


@dataclass(frozen=True)
class WordToken:
    """A single word with a time interval (or a time point)."""

    word: str
    begin_time: float | None = None
    end_time: float | None = None


@dataclass(frozen=True)
class SegLst:
    """An ordered list of segments belonging to one session.

    Construct via :func:`validate`, which normalizes whitespace, checks
    times, and establishes the canonical order (nondecreasing begin
    time, ties keeping input order).
    """

    segments: tuple[Segment, ...] = ()

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def session_id(self) -> str | None:
        return self.segments[0].session_id if self.segments else None

    def labels(self) -> list[str]:
        """Distinct labels in sorted order."""
        return sorted({s.label for s in self.segments})

    def word_count(self) -> int:
        return sum(len(s.word_list()) for s in self.segments)

    def by_label(self, label: str) -> list[Segment]:
        """Segments of one label, in canonical order."""
        return [s for s in self.segments if s.label == label]


def _normalize_words(words: str) -> str:
    return " ".join(words.split())


def validate(seglst: SegLst | Iterable[Segment]) -> SegLst:
    """Return a cleaned, canonically ordered copy of ``seglst``.

    Whitespace in every ``words`` string is collapsed, segments are
    stably sorted by begin time (segments without a begin time keep
    their relative order and sort first), and basic invariants are
    checked.

    Raises:
        MixedSessionIds: segments carry more than one session_id.
        NegativeDuration: a segment has ``end_time < begin_time``.
    """
    segments = list(seglst.segments if isinstance(seglst, SegLst) else seglst)

    sessions = {s.session_id for s in segments}
    if len(sessions) > 1:
        raise MixedSessionIds(f"expected a single session_id, got {sorted(sessions)}")

    cleaned = []
    for s in segments:
        if s.begin_time is not None and s.end_time is not None and s.end_time < s.begin_time:
            raise NegativeDuration(
                f"segment ends at {s.end_time} before it begins at {s.begin_time}"
            )
        words = _normalize_words(s.words)
        cleaned.append(replace(s, words=words) if words != s.words else s)

    cleaned.sort(key=lambda s: s.begin_time if s.begin_time is not None else float("-inf"))
    return SegLst(tuple(cleaned))


def tokenize(segment: Segment) -> list[str]:
    """Split a segment's words on whitespace; empty words give ``[]``."""
    return segment.word_list()


def pseudo_word_timestamps(segment: Segment, mode: TimestampMode) -> list[WordToken]:
    """Estimate word-level timestamps from a segment-level annotation.

    In ``CHARACTER_BASED`` mode the word intervals exactly tile the
    segment: the first begins at the segment begin, the last ends at the
    segment end, and adjacent intervals share an endpoint. Character
    counts exclude whitespace.

    Raises:
        MissingTimes: the segment lacks begin or end time and ``mode``
            needs them (``SEGMENT_INTERVAL`` tolerates missing times and
            passes ``None`` through).
    """
    words = segment.word_list()
    if mode is TimestampMode.SEGMENT_INTERVAL:
        return [WordToken(w, segment.begin_time, segment.end_time) for w in words]

    if not segment.has_times:
        raise MissingTimes(
            f"{mode.value} timestamps need segment times, got "
            f"begin={segment.begin_time} end={segment.end_time}"
        )
    if not words:
        return []

    begin = float(segment.begin_time)  # type: ignore[arg-type]
    end = float(segment.end_time)  # type: ignore[arg-type]
    duration = end - begin
    char_counts = [len(w) for w in words]
    total = sum(char_counts)

    # Interval boundaries at cumulative character fractions. The first and
    # last boundaries are pinned to the segment times so the intervals tile
    # the segment exactly despite float rounding.
    boundaries = [begin]
    running = 0
    for count in char_counts[:-1]:
        running += count
        boundaries.append(begin + duration * running / total)
    boundaries.append(end)

    if mode is TimestampMode.CHARACTER_BASED:
        return [
            WordToken(w, boundaries[i], boundaries[i + 1]) for i, w in enumerate(words)
        ]
    # CHARACTER_BASED_POINTS: zero-length tokens at interval midpoints.
    return [
        WordToken(w, (boundaries[i] + boundaries[i + 1]) / 2, (boundaries[i] + boundaries[i + 1]) / 2)
        for i, w in enumerate(words)
    ]


#: Recommended word timestamp modes: intervals on the reference side,
#: center points on the hypothesis side (interval-valued hypothesis words
#: could be stretched to game a time-constrained metric).
DEFAULT_REF_MODE = TimestampMode.CHARACTER_BASED
DEFAULT_HYP_MODE = TimestampMode.CHARACTER_BASED_POINTS

TsModeArg = TimestampMode | tuple[TimestampMode, TimestampMode] | None


def resolve_ts_modes(ts_mode: TsModeArg) -> tuple[TimestampMode, TimestampMode]:
    """Normalize a timestamp-mode argument to a (reference, hypothesis) pair.

    ``None`` selects the recommended defaults; a single mode applies to
    both sides; a pair is passed through.
    """
    if ts_mode is None:
        return DEFAULT_REF_MODE, DEFAULT_HYP_MODE
    if isinstance(ts_mode, TimestampMode):
        return ts_mode, ts_mode
    ref_mode, hyp_mode = ts_mode
    return ref_mode, hyp_mode


def segment_tokens(segment: Segment, mode: TimestampMode, timed: bool) -> list[WordToken]:
    """Word tokens for one segment, with times only when ``timed``."""
    if timed:
        return pseudo_word_timestamps(segment, mode)
    return [WordToken(w) for w in segment.word_list()]


def explode_to_word_level(seglst: SegLst, mode: TimestampMode) -> SegLst:
    """Replace every segment by one single-word segment per word.

    Word times come from :func:`pseudo_word_timestamps`; labels and the
    session id are inherited. Empty segments vanish. The result is
    canonically re-sorted.
    """
    exploded = []
    for segment in seglst:
        for token in pseudo_word_timestamps(segment, mode):
            exploded.append(
                Segment(
                    session_id=segment.session_id,
                    label=segment.label,
                    words=token.word,
                    begin_time=token.begin_time,
                    end_time=token.end_time,
                    extra=segment.extra,
                )
            )
    return validate(exploded)
