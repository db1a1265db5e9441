"""Edit distance with configurable costs, time constraint, and backtrace.

The standard distance treats word sequences symbolically. The
time-constrained variant additionally forbids matching two words as
correct/substituted when they are farther apart in time than a collar;
this both makes alignments of long recordings plausible and allows the
computation to be restricted to a narrow band of the matrix.

The band is exact, not approximate: per-row column windows are derived
from monotone envelopes of the token times, and consecutive windows are
forced to overlap. Every feasible diagonal step lies inside the band,
and any insert/delete detour outside it can be rerouted through the band
at identical cost, so the banded result is bit-identical to a full
matrix computation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import MissingTimes, UnsortedTokens
from .seglst import WordToken

#: Collar value meaning "no time constraint".
UNBOUNDED: float = math.inf

# Infinity sentinel for forbidden transitions. Large enough to dominate
# any achievable distance, small enough that repeated cost additions can
# never overflow int64.
INF = 1 << 50


@dataclass(frozen=True)
class CostScheme:
    """Edit operation costs.

    Unit costs (1, 1, 1, 0) are the default; (4, 4, 3, 0) is a common
    alternative that prefers substitutions over insertion/deletion
    pairs. Any scheme with ``c_correct < c_substitute <= c_insert ==
    c_delete`` is accepted. Distances differ between schemes but the
    derived word error rates do not; only the backtraced alignment may.
    """

    c_insert: int = 1
    c_delete: int = 1
    c_substitute: int = 1
    c_correct: int = 0

    def __post_init__(self) -> None:
        if min(self.c_insert, self.c_delete, self.c_substitute) < 0:
            raise ValueError("edit costs must be nonnegative")
        if not (self.c_correct < self.c_substitute <= self.c_insert == self.c_delete):
            raise ValueError(
                "cost scheme must satisfy "
                "c_correct < c_substitute <= c_insert == c_delete, got "
                f"{self}"
            )


UNIT_COSTS = CostScheme()


class MatchKind(enum.Enum):
    CORRECT = "correct"
    SUBSTITUTION = "substitution"
    INSERTION = "insertion"
    DELETION = "deletion"


@dataclass(frozen=True)
class EditOp:
    """One backtraced edit step.

    ``ref_index`` is set for correct/substitution/deletion,
    ``hyp_index`` for correct/substitution/insertion.
    """

    kind: MatchKind
    ref_index: int | None = None
    hyp_index: int | None = None


AlignmentTrace = tuple[EditOp, ...]


@dataclass(frozen=True)
class ErrorCounts:
    insertions: int = 0
    deletions: int = 0
    substitutions: int = 0
    correct: int = 0
    ref_length: int = 0

    @property
    def errors(self) -> int:
        return self.insertions + self.deletions + self.substitutions

    @property
    def error_rate(self) -> float | None:
        """``errors / ref_length``; ``None`` when the reference is empty.

        May exceed 1.0, since insertions are unbounded.
        """
        if self.ref_length == 0:
            return None
        return self.errors / self.ref_length

    def __add__(self, other: "ErrorCounts") -> "ErrorCounts":
        return ErrorCounts(
            self.insertions + other.insertions,
            self.deletions + other.deletions,
            self.substitutions + other.substitutions,
            self.correct + other.correct,
            self.ref_length + other.ref_length,
        )


def counts_from_trace(trace: Sequence[EditOp], ref_length: int | None = None) -> ErrorCounts:
    kinds = [op.kind for op in trace]
    counts = ErrorCounts(
        insertions=kinds.count(MatchKind.INSERTION),
        deletions=kinds.count(MatchKind.DELETION),
        substitutions=kinds.count(MatchKind.SUBSTITUTION),
        correct=kinds.count(MatchKind.CORRECT),
        ref_length=0,
    )
    n_ref = counts.correct + counts.substitutions + counts.deletions
    if ref_length is not None and ref_length != n_ref:
        raise ValueError(f"trace covers {n_ref} reference words, expected {ref_length}")
    return ErrorCounts(
        counts.insertions, counts.deletions, counts.substitutions, counts.correct, n_ref
    )


@dataclass(frozen=True)
class LevResult:
    distance: int
    counts: ErrorCounts
    trace: AlignmentTrace


def _intern_words(*sequences: Sequence[str]) -> list[np.ndarray]:
    """Map words to integer ids for fast vectorized comparison."""
    vocab: dict[str, int] = {}
    out = []
    for seq in sequences:
        ids = np.empty(len(seq), dtype=np.int64)
        for i, w in enumerate(seq):
            ids[i] = vocab.setdefault(w, len(vocab))
        out.append(ids)
    return out


def _row_windows(
    m: int,
    n: int,
    collar: float,
    rbeg: np.ndarray | None,
    rend: np.ndarray | None,
    hbeg: np.ndarray | None,
    hend: np.ndarray | None,
) -> tuple[np.ndarray, np.ndarray]:
    """Column windows [a_i, b_i] per matrix row, 0..m.

    Windows are monotone, consecutive windows overlap, every
    time-feasible diagonal step has both its source and target cell
    inside, and row 0 starts at column 0 while row m ends at column n.
    Without a time constraint (or without times) the windows span full
    rows.
    """
    a = np.zeros(m + 1, dtype=np.int64)
    b = np.full(m + 1, n, dtype=np.int64)
    if not math.isinf(collar) and m > 0 and n > 0:
        assert rbeg is not None and rend is not None
        assert hbeg is not None and hend is not None
        # Monotone envelopes: a word pair (ri, hj) can only be matched if
        #   rbeg[ri] - hend[hj] <= collar  and  hbeg[hj] - rend[ri] <= collar.
        rbeg_sufmin = np.minimum.accumulate(rbeg[::-1])[::-1]
        rend_prefmax = np.maximum.accumulate(rend)
        hend_prefmax = np.maximum.accumulate(hend)
        hbeg_sufmin = np.minimum.accumulate(hbeg[::-1])[::-1]

        # lo_env[ri]: leftmost hyp word usable by any reference word >= ri.
        lo_env = np.searchsorted(hend_prefmax, rbeg_sufmin - collar, side="left")
        # hi_env[ri]: one past the rightmost hyp word usable by any
        # reference word <= ri.
        hi_env = np.searchsorted(hbeg_sufmin, rend_prefmax + collar, side="right")

        # Matrix row i pairs reference word i-1: its diagonal targets are
        # columns [lo_env[i-1]+1, hi_env[i-1]] and their sources live one
        # row up and one column left. Each row's window covers its own
        # targets and the next row's sources; forcing a[i] <= b[i-1] keeps
        # consecutive windows overlapping, which makes the band exact.
        b[0] = min(max(int(hi_env[0]) - 1, 0), n)
        for i in range(1, m + 1):
            lo = int(lo_env[i - 1]) + 1
            hi = int(hi_env[i - 1])
            if i < m:
                lo = min(lo, int(lo_env[i]))
                hi = max(hi, int(hi_env[i]) - 1)
            a[i] = max(a[i - 1], min(lo, int(b[i - 1]), n))
            b[i] = min(max(hi, int(a[i])), n)
        b[m] = n
    return a, b


def _engine(
    ref_words: Sequence[str],
    hyp_words: Sequence[str],
    costs: CostScheme | None,
    collar: float = UNBOUNDED,
    ref_times: tuple[np.ndarray, np.ndarray] | None = None,
    hyp_times: tuple[np.ndarray, np.ndarray] | None = None,
) -> LevResult:
    costs = costs or UNIT_COSTS
    ci, cd, cs, cc = costs.c_insert, costs.c_delete, costs.c_substitute, costs.c_correct
    m, n = len(ref_words), len(hyp_words)
    ref_ids, hyp_ids = _intern_words(ref_words, hyp_words)
    rbeg, rend = ref_times if ref_times is not None else (None, None)
    hbeg, hend = hyp_times if hyp_times is not None else (None, None)
    timed = not math.isinf(collar)

    a, b = _row_windows(m, n, collar, rbeg, rend, hbeg, hend)

    # Forward pass over banded rows.
    rows: list[np.ndarray] = []
    row0 = np.arange(a[0], b[0] + 1, dtype=np.int64) * ci
    rows.append(row0)
    prev = row0
    for i in range(1, m + 1):
        lo, hi = int(a[i]), int(b[i])
        width = hi - lo + 1
        plo, phi = int(a[i - 1]), int(b[i - 1])

        # Sources from the previous row, INF outside its window.
        del_src = np.full(width, INF, dtype=np.int64)
        s = max(lo, plo)
        e = min(hi, phi)
        if s <= e:
            del_src[s - lo : e - lo + 1] = prev[s - plo : e - plo + 1]
        diag_src = np.full(width, INF, dtype=np.int64)
        s = max(lo, plo + 1)
        e = min(hi, phi + 1)
        if s <= e:
            diag_src[s - lo : e - lo + 1] = prev[s - 1 - plo : e - plo]

        # Diagonal step cost per column: correct/substitute by word
        # identity, INF when the time constraint forbids the pair.
        cols = np.arange(lo, hi + 1)
        dcost = np.full(width, INF, dtype=np.int64)
        valid = cols >= 1
        j = cols[valid] - 1
        word_cost = np.where(hyp_ids[j] == ref_ids[i - 1], cc, cs)
        if timed:
            feasible = (rbeg[i - 1] - hend[j] <= collar) & (hbeg[j] - rend[i - 1] <= collar)
            word_cost = np.where(feasible, word_cost, INF)
        dcost[valid] = word_cost

        base = np.minimum(del_src + cd, diag_src + dcost)
        # Insertion is a prefix scan along the row:
        # cur[j] = min(base[j], cur[j-1] + ci).
        shifted = base - cols * ci
        np.minimum.accumulate(shifted, out=shifted)
        cur = shifted + cols * ci
        rows.append(cur)
        prev = cur

    distance = int(prev[n - int(a[m])])

    # Backtrace, preferring diagonal, then deletion, then insertion.
    ops: list[EditOp] = []
    i, j = m, n
    while i > 0 or j > 0:
        lo = int(a[i])
        val = rows[i][j - lo]
        took = False
        if i > 0 and j > 0:
            plo, phi = int(a[i - 1]), int(b[i - 1])
            if plo <= j - 1 <= phi:
                same = ref_ids[i - 1] == hyp_ids[j - 1]
                step = cc if same else cs
                if timed:
                    ok = (
                        rbeg[i - 1] - hend[j - 1] <= collar
                        and hbeg[j - 1] - rend[i - 1] <= collar
                    )
                    if not ok:
                        step = INF
                if step < INF and rows[i - 1][j - 1 - plo] + step == val:
                    ops.append(
                        EditOp(
                            MatchKind.CORRECT if same else MatchKind.SUBSTITUTION,
                            ref_index=i - 1,
                            hyp_index=j - 1,
                        )
                    )
                    i, j = i - 1, j - 1
                    took = True
        if not took and i > 0:
            plo, phi = int(a[i - 1]), int(b[i - 1])
            if plo <= j <= phi and rows[i - 1][j - plo] + cd == val:
                ops.append(EditOp(MatchKind.DELETION, ref_index=i - 1))
                i -= 1
                took = True
        if not took:
            assert j > lo and rows[i][j - 1 - lo] + ci == val, "backtrace stuck"
            ops.append(EditOp(MatchKind.INSERTION, hyp_index=j - 1))
            j -= 1
    ops.reverse()
    trace = tuple(ops)
    return LevResult(distance, counts_from_trace(trace, m), trace)


def lev(
    ref_words: Sequence[str],
    hyp_words: Sequence[str],
    costs: CostScheme | None = None,
) -> LevResult:
    """Edit distance between two word sequences, with counts and trace."""
    return _engine(list(ref_words), list(hyp_words), costs)


def _token_times(tokens: Sequence[WordToken], side: str) -> tuple[np.ndarray, np.ndarray]:
    begins = np.empty(len(tokens), dtype=np.float64)
    ends = np.empty(len(tokens), dtype=np.float64)
    for i, t in enumerate(tokens):
        if t.begin_time is None or t.end_time is None:
            raise MissingTimes(
                f"time-constrained distance needs word times; {side} token "
                f"{i} ({t.word!r}) has none"
            )
        begins[i] = t.begin_time
        ends[i] = t.end_time
    return begins, ends


def tc_lev(
    ref_tokens: Sequence[WordToken],
    hyp_tokens: Sequence[WordToken],
    collar: float = UNBOUNDED,
    costs: CostScheme | None = None,
    *,
    require_sorted: bool = True,
) -> LevResult:
    """Time-constrained edit distance between two token sequences.

    A correct or substitution match between words is forbidden when
    ``ref.begin - hyp.end > collar`` or ``hyp.begin - ref.end > collar``.
    With an unbounded collar this equals :func:`lev`. Tokens on each
    side must be nondecreasing in begin time; metrics that concatenate
    overlapping segments of one speaker pass ``require_sorted=False``
    (the band stays exact, it merely widens).
    """
    if collar < 0:
        raise ValueError(f"collar must be nonnegative, got {collar}")
    ref_words = [t.word for t in ref_tokens]
    hyp_words = [t.word for t in hyp_tokens]
    if math.isinf(collar):
        return _engine(ref_words, hyp_words, costs)
    ref_times = _token_times(ref_tokens, "reference")
    hyp_times = _token_times(hyp_tokens, "hypothesis")
    if require_sorted:
        for side, (begins, _) in (("reference", ref_times), ("hypothesis", hyp_times)):
            if np.any(np.diff(begins) < 0):
                raise UnsortedTokens(f"{side} tokens are not sorted by begin time")
    return _engine(ref_words, hyp_words, costs, collar, ref_times, hyp_times)


def _pair_cost(
    fixed_word: str,
    fixed_times: tuple[float, float] | None,
    var_word: str,
    var_times: tuple[float, float] | None,
    costs: CostScheme,
    cs: int,
    collar: float,
) -> int:
    if not math.isinf(collar):
        fb, fe = fixed_times  # type: ignore[misc]
        vb, ve = var_times  # type: ignore[misc]
        if fb - ve > collar or vb - fe > collar:
            return INF
    return costs.c_correct if fixed_word == var_word else cs


def _token_pairs(tokens: Sequence[WordToken], collar: float, side: str) -> list:
    if math.isinf(collar):
        return [(t.word, None) for t in tokens]
    begins, ends = _token_times(tokens, side)
    return [(t.word, (begins[i], ends[i])) for i, t in enumerate(tokens)]


def extend_column(
    column: Sequence[int],
    fixed: list,
    new_var: list,
    costs: CostScheme,
    cs: int | None = None,
    collar: float = UNBOUNDED,
) -> list[int]:
    """Advance a forward distance column by appending variable-side words.

    ``column[r]`` holds the distance between the first ``r`` fixed words
    and the variable prefix consumed so far; ``fixed`` and ``new_var``
    are ``(word, times)`` pairs as produced by :func:`_token_pairs`.
    Consuming a variable word against no fixed word costs an insertion;
    consuming a fixed word against no variable word costs a deletion.
    ``cs`` overrides the substitution cost (the greedy search trades a
    substitution for insertion plus deletion in its first phase).
    """
    cs = costs.c_substitute if cs is None else cs
    ci, cd = costs.c_insert, costs.c_delete
    col = list(column)
    f = len(fixed)
    for vw, vt in new_var:
        new = [0] * (f + 1)
        new[0] = col[0] + ci
        for r in range(1, f + 1):
            fw, ft = fixed[r - 1]
            new[r] = min(
                new[r - 1] + cd,
                col[r] + ci,
                col[r - 1] + _pair_cost(fw, ft, vw, vt, costs, cs, collar),
            )
        col = new
    return col


def suffix_columns(
    fixed: list,
    var: list,
    costs: CostScheme,
    cs: int | None = None,
    collar: float = UNBOUNDED,
) -> list[list[int]]:
    """Distance columns between all suffix pairs.

    ``result[p][r]`` is the distance between ``fixed[r:]`` and
    ``var[p:]``. Equivalent to running the forward computation on the
    reversed sequences; combining a forward column with the suffix
    column at the same split point and minimizing over the fixed
    position yields the total distance, for any split point.
    """
    cs = costs.c_substitute if cs is None else cs
    ci, cd = costs.c_insert, costs.c_delete
    f, v = len(fixed), len(var)
    cols: list[list[int]] = [[]] * (v + 1)
    last = [(f - r) * cd for r in range(f + 1)]
    cols[v] = last
    for p in range(v - 1, -1, -1):
        vw, vt = var[p]
        nxt = cols[p + 1]
        cur = [0] * (f + 1)
        cur[f] = nxt[f] + ci
        for r in range(f - 1, -1, -1):
            fw, ft = fixed[r]
            cur[r] = min(
                cur[r + 1] + cd,
                nxt[r] + ci,
                nxt[r + 1] + _pair_cost(fw, ft, vw, vt, costs, cs, collar),
            )
        cols[p] = cur
    return cols


def combine_columns(forward: Sequence[int], suffix: Sequence[int]) -> int:
    """Total distance from a forward column and the matching suffix column."""
    return min(fw + sf for fw, sf in zip(forward, suffix))
