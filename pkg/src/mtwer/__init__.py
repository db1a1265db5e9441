"""Word error rates for long-form multi-talker speech recognition.

The package computes the family of meeting-level WERs (cpWER, tcpWER,
DA-WER, ORC-WER, MIMO-WER, DI-cpWER, their time-constrained and
word-level variants, and greedy approximations) and emits interactive
trace-alignment pages for error analysis.
"""

from .errors import (
    BadFieldCount,
    ComplexityGuardExceeded,
    InconsistentState,
    MalformedDocument,
    MissingRequiredKey,
    MissingTimes,
    MixedSessionIds,
    MtwerError,
    NegativeDuration,
    NonNumericTime,
    SweepLimitExceeded,
    TooLarge,
    UnsortedTokens,
)
from .formats import (
    load_transcript,
    parse_seglst,
    parse_stm,
    serialize_seglst,
    serialize_stm,
)
from .greedy import GreedyConfig, StreamMatrices, greedy_di_cp, greedy_orc, incremental_move_delta
from .levenshtein import (
    UNBOUNDED,
    AlignmentTrace,
    CostScheme,
    EditOp,
    ErrorCounts,
    LevResult,
    MatchKind,
    lev,
    tc_lev,
)
from .report import Report, score_session, score_sessions, session_wer
from .seglst import (
    Segment,
    SegLst,
    TimestampMode,
    WordToken,
    explode_to_word_level,
    pseudo_word_timestamps,
    tokenize,
    validate,
)
from .speaker_attributed import (
    CpResult,
    DaResult,
    DerCounts,
    DerResult,
    SpeakerMapping,
    cp_wer,
    da_wer,
    der,
)
from .stream_assignment import (
    AssignmentResult,
    StreamAssignment,
    brute_force_oracle,
    di_cp_wer,
    mimo_wer,
    orc_wer,
)
from .viz import build_alignment_document, emit_alignment_html

__version__ = "0.1.0"

__all__ = [
    "AlignmentTrace",
    "AssignmentResult",
    "BadFieldCount",
    "ComplexityGuardExceeded",
    "CostScheme",
    "CpResult",
    "DaResult",
    "DerCounts",
    "DerResult",
    "EditOp",
    "ErrorCounts",
    "GreedyConfig",
    "InconsistentState",
    "LevResult",
    "MalformedDocument",
    "MatchKind",
    "MissingRequiredKey",
    "MissingTimes",
    "MixedSessionIds",
    "MtwerError",
    "NegativeDuration",
    "NonNumericTime",
    "Report",
    "SegLst",
    "Segment",
    "SpeakerMapping",
    "StreamAssignment",
    "StreamMatrices",
    "SweepLimitExceeded",
    "TimestampMode",
    "TooLarge",
    "UNBOUNDED",
    "UnsortedTokens",
    "WordToken",
    "brute_force_oracle",
    "build_alignment_document",
    "cp_wer",
    "da_wer",
    "der",
    "di_cp_wer",
    "emit_alignment_html",
    "explode_to_word_level",
    "greedy_di_cp",
    "greedy_orc",
    "incremental_move_delta",
    "lev",
    "load_transcript",
    "mimo_wer",
    "orc_wer",
    "parse_seglst",
    "parse_stm",
    "pseudo_word_timestamps",
    "score_session",
    "score_sessions",
    "serialize_seglst",
    "serialize_stm",
    "session_wer",
    "tc_lev",
    "tokenize",
    "validate",
]
