"""The transcript data model: segments, validation, word timestamps.

Both references and hypotheses are lists of segments: a contiguous
stretch of speech from one speaker (or one system output stream), with
a space-separated word string and optional begin/end times.
"""

from mtwer import Segment, TimestampMode, explode_to_word_level, pseudo_word_timestamps, validate

segments = [
    Segment("demo", "alice", "  good   morning ", begin_time=3.0, end_time=4.5),
    Segment("demo", "bob", "hi", begin_time=0.0, end_time=0.4),
]

# validate() normalizes whitespace and sorts by begin time (stable on ties).
transcript = validate(segments)
for s in transcript:
    print(f"{s.begin_time:>5.1f}s  {s.label:<6} {s.words!r}")

# Word-level timestamps are usually not annotated. They can be estimated
# from the segment times by splitting the interval proportionally to the
# character count of each word, a rough proxy for pronunciation length.
segment = transcript.segments[1]
for mode in TimestampMode:
    tokens = pseudo_word_timestamps(segment, mode)
    print(mode.value, [(t.word, round(t.begin_time, 3), round(t.end_time, 3)) for t in tokens])

# Center points (zero-length tokens) are the recommended choice for the
# hypothesis side: a system could otherwise stretch word intervals to
# make far-away matches look temporally plausible.

# Exploding to word level turns every word into its own segment; the
# word-level metric variants are ordinary metrics applied afterwards.
words = explode_to_word_level(transcript, TimestampMode.CHARACTER_BASED)
print([s.words for s in words])
