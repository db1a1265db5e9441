"""Scoring across sessions and report assembly.

A report carries per-session error counts plus the resolved assignment,
and a micro-averaged aggregate (summed errors over summed reference
lengths, never an average of rates). Sessions may be scored in parallel
worker processes; assembly is deterministic.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from .greedy import greedy_di_cp, greedy_orc
from .levenshtein import UNBOUNDED, ErrorCounts, lev
from .seglst import SegLst, TsModeArg, explode_to_word_level, resolve_ts_modes, validate
from .speaker_attributed import CpResult, DaResult, cp_wer, da_wer
from .stream_assignment import (
    DEFAULT_CELL_BUDGET,
    AssignmentResult,
    di_cp_wer,
    mimo_wer,
    orc_wer,
)

#: Collar used by the time-constrained CLI commands unless overridden.
DEFAULT_COLLAR = 5.0


@dataclass(frozen=True)
class PlainResult:
    counts: ErrorCounts
    trace: tuple

    @property
    def error_rate(self) -> float | None:
        return self.counts.error_rate


def session_wer(ref: SegLst, hyp: SegLst) -> PlainResult:
    """Single-sequence WER: all segments concatenated in canonical order."""
    ref = validate(ref)
    hyp = validate(hyp)
    result = lev(
        [w for s in ref for w in s.word_list()],
        [w for s in hyp for w in s.word_list()],
    )
    return PlainResult(result.counts, result.trace)


#: metric name -> (needs collar, supports word-level explosion)
METRICS: dict[str, tuple[bool, bool]] = {
    "wer": (False, False),
    "cpwer": (False, False),
    "tcpwer": (True, False),
    "dawer": (False, False),
    "orcwer": (False, True),
    "tcorcwer": (True, True),
    "mimower": (False, True),
    "tcmimower": (True, True),
    "dicpwer": (False, True),
    "ditcpwer": (True, True),
    "greedy-dicpwer": (False, True),
    "greedy-orcwer": (False, True),
}


def score_session(
    metric: str,
    ref: SegLst,
    hyp: SegLst,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    word_level: bool = False,
    cell_budget: int = DEFAULT_CELL_BUDGET,
):
    """Score one session; returns the metric's full result object."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if word_level:
        if not METRICS[metric][1]:
            raise ValueError(f"metric {metric!r} has no word-level variant")
        ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
        ref = explode_to_word_level(validate(ref), ref_mode)
        hyp = explode_to_word_level(validate(hyp), hyp_mode)

    if metric == "wer":
        return session_wer(ref, hyp)
    if metric in ("cpwer", "tcpwer"):
        return cp_wer(ref, hyp, collar=collar, ts_mode=ts_mode)
    if metric == "dawer":
        return da_wer(ref, hyp)
    if metric in ("orcwer", "tcorcwer"):
        return orc_wer(ref, hyp, collar=collar, ts_mode=ts_mode, cell_budget=cell_budget)
    if metric in ("mimower", "tcmimower"):
        return mimo_wer(ref, hyp, collar=collar, ts_mode=ts_mode, cell_budget=cell_budget)
    if metric in ("dicpwer", "ditcpwer"):
        return di_cp_wer(ref, hyp, collar=collar, ts_mode=ts_mode, cell_budget=cell_budget)
    if metric == "greedy-dicpwer":
        return greedy_di_cp(ref, hyp, collar=collar, ts_mode=ts_mode)
    assert metric == "greedy-orcwer"
    return greedy_orc(ref, hyp, collar=collar, ts_mode=ts_mode)


def assignment_payload(result: Any) -> Any:
    """JSON-serializable form of a result's resolved assignment."""
    if isinstance(result, (CpResult, DaResult)):
        return {"type": "speaker_mapping", "pairs": [list(p) for p in result.mapping.pairs]}
    if isinstance(result, AssignmentResult):
        return {
            "type": "stream_assignment",
            "labels": list(result.assignment.labels),
            "order": list(result.assignment.order),
        }
    return None


@dataclass(frozen=True)
class SessionScore:
    session_id: str
    counts: ErrorCounts
    assignment: Any


@dataclass(frozen=True)
class Report:
    sessions: tuple[SessionScore, ...]
    counts: ErrorCounts

    def to_dict(self) -> dict[str, Any]:
        def block(counts: ErrorCounts, assignment: Any) -> dict[str, Any]:
            return {
                "error_rate": counts.error_rate,
                "errors": counts.errors,
                "length": counts.ref_length,
                "insertions": counts.insertions,
                "deletions": counts.deletions,
                "substitutions": counts.substitutions,
                "correct": counts.correct,
                "assignment": assignment,
            }

        top_assignment = self.sessions[0].assignment if len(self.sessions) == 1 else None
        out = block(self.counts, top_assignment)
        out["sessions"] = {
            s.session_id: block(s.counts, s.assignment) for s in self.sessions
        }
        return out


def _score_one(args) -> SessionScore:
    session_id, metric, ref, hyp, collar, ts_mode, word_level, cell_budget = args
    result = score_session(metric, ref, hyp, collar, ts_mode, word_level, cell_budget)
    return SessionScore(session_id, result.counts, assignment_payload(result))


def score_sessions(
    metric: str,
    refs: dict[str, SegLst],
    hyps: dict[str, SegLst],
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    word_level: bool = False,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    workers: int = 1,
) -> Report:
    """Score every session in the union of both collections.

    A session missing on one side scores against an empty transcript
    (pure deletions or insertions).
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if word_level and not METRICS[metric][1]:
        raise ValueError(f"metric {metric!r} has no word-level variant")
    ids = sorted(set(refs) | set(hyps))
    jobs = [
        (
            sid,
            metric,
            refs.get(sid, SegLst()),
            hyps.get(sid, SegLst()),
            collar,
            ts_mode,
            word_level,
            cell_budget,
        )
        for sid in ids
    ]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            scores = list(pool.map(_score_one, jobs))
    else:
        scores = [_score_one(job) for job in jobs]
    total = ErrorCounts()
    for score in scores:
        total = total + score.counts
    return Report(tuple(scores), total)
