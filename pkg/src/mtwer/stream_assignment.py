"""Speaker-agnostic metrics: ORC-WER, MIMO-WER, DI-cpWER, exact.

All three minimize a summed per-stream distance over segment-to-stream
assignments:

* ORC assigns reference utterances to hypothesis streams, keeping the
  global utterance order.
* MIMO additionally lets utterances of different speakers be reordered,
  as long as each speaker's own order is kept and one global emission
  order consistent with every speaker and every stream exists.
* DI-cp swaps the roles: hypothesis segments are assigned to reference
  speakers (a relabeling of the hypothesis), while insertions/deletions
  and the denominator stay oriented to the true reference.

The search runs as a dynamic program over assignment states. A state
counts the utterances consumed per speaker and holds a cost tensor
indexed by the joint per-stream word positions; assigning the next
utterance of some speaker to stream ``c`` sweeps a banded edit-distance
recursion along dimension ``c``, and tensors of merging states combine
by elementwise minimum. With a finite collar, tensor slices that are
provably unreachable at finite cost (stream words already dead, or not
yet matchable) are never materialized, which is what makes the
time-constrained variants fast.

The optimal assignment itself is reconstructed deterministically with a
backward pass: committing, step by step, the smallest (speaker, stream)
choice that still completes to the optimum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import ComplexityGuardExceeded, TooLarge
from .levenshtein import (
    INF,
    UNBOUNDED,
    AlignmentTrace,
    CostScheme,
    ErrorCounts,
    LevResult,
    UNIT_COSTS,
    lev,
    tc_lev,
)
from .seglst import (
    SegLst,
    TimestampMode,
    TsModeArg,
    WordToken,
    resolve_ts_modes,
    segment_tokens,
    validate,
)

DEFAULT_CELL_BUDGET = 10**9


@dataclass(frozen=True)
class StreamAssignment:
    """Resolved assignment of the reassigned side's segments.

    ``labels[i]`` is the target label given to the i-th segment (in
    canonical order) of the reassigned side: reference segments for
    ORC/MIMO, hypothesis segments for DI-cp. ``order`` is the emission
    order of those segments as segment indices; the identity for
    ORC/DI-cp, a per-speaker-order-respecting interleaving for MIMO.
    """

    labels: tuple[str | None, ...]
    order: tuple[int, ...]


@dataclass(frozen=True)
class AssignmentResult:
    counts: ErrorCounts
    assignment: StreamAssignment
    traces: Mapping[str | None, AlignmentTrace]
    distance: int

    @property
    def error_rate(self) -> float | None:
        return self.counts.error_rate


@dataclass
class _Item:
    index: int  # position in the canonical segment order of its side
    tokens: list[WordToken]
    ids: np.ndarray
    begins: np.ndarray
    ends: np.ndarray
    min_begin: float
    max_end: float


@dataclass
class _Stream:
    label: str | None
    tokens: list[WordToken]
    ids: np.ndarray
    begins: np.ndarray
    ends: np.ndarray
    # Monotone time envelopes over word index, for window computation.
    beg_sufmin: np.ndarray
    end_prefmax: np.ndarray

    def __len__(self) -> int:
        return len(self.ids)


class _Vocab:
    def __init__(self) -> None:
        self._ids: dict[str, int] = {}

    def encode(self, words: Sequence[str]) -> np.ndarray:
        return np.array(
            [self._ids.setdefault(w, len(self._ids)) for w in words], dtype=np.int64
        )


def _make_item(index: int, tokens: list[WordToken], vocab: _Vocab, timed: bool) -> _Item:
    ids = vocab.encode([t.word for t in tokens])
    if timed and tokens:
        begins = np.array([t.begin_time for t in tokens], dtype=np.float64)
        ends = np.array([t.end_time for t in tokens], dtype=np.float64)
    else:
        begins = np.zeros(len(tokens))
        ends = np.zeros(len(tokens))
    min_begin = float(begins.min()) if len(tokens) else math.inf
    max_end = float(ends.max()) if len(tokens) else -math.inf
    return _Item(index, tokens, ids, begins, ends, min_begin, max_end)


def _make_stream(label: str | None, tokens: list[WordToken], vocab: _Vocab, timed: bool) -> _Stream:
    ids = vocab.encode([t.word for t in tokens])
    if timed and tokens:
        begins = np.array([t.begin_time for t in tokens], dtype=np.float64)
        ends = np.array([t.end_time for t in tokens], dtype=np.float64)
    else:
        begins = np.zeros(len(tokens))
        ends = np.zeros(len(tokens))
    beg_sufmin = np.minimum.accumulate(begins[::-1])[::-1] if len(ids) else begins
    end_prefmax = np.maximum.accumulate(ends) if len(ids) else ends
    return _Stream(label, tokens, ids, begins, ends, beg_sufmin, end_prefmax)


# --- tensor plumbing --------------------------------------------------------

Window = tuple[int, int]  # inclusive position range along one stream axis


def _closure_fw(t: np.ndarray, axis: int, ci: int) -> np.ndarray:
    """Allow trailing insertions: t[p] = min_{q<=p} t[q] + (p-q)*ci."""
    t = np.moveaxis(t, axis, -1)
    pos = np.arange(t.shape[-1], dtype=np.int64) * ci
    t = np.minimum.accumulate(t - pos, axis=-1) + pos
    return np.moveaxis(t, -1, axis)


def _closure_bw(t: np.ndarray, axis: int, ci: int) -> np.ndarray:
    """Backward counterpart: t[p] = min_{q>=p} t[q] + (q-p)*ci."""
    t = np.moveaxis(t, axis, -1)
    pos = np.arange(t.shape[-1], dtype=np.int64) * ci
    t = np.flip(np.minimum.accumulate(np.flip(t + pos, -1), axis=-1), -1) - pos
    return np.moveaxis(t, -1, axis)


def _reshape_fw(
    t: np.ndarray, old: list[Window], new: list[Window], ci: int
) -> np.ndarray:
    """Move a forward tensor to higher windows (raise lows, extend highs)."""
    for axis, ((olo, ohi), (nlo, nhi)) in enumerate(zip(old, new)):
        if (olo, ohi) == (nlo, nhi):
            continue
        assert nlo >= olo and nhi >= ohi, (old, new)
        t = _closure_fw(t, axis, ci)
        tm = np.moveaxis(t, axis, -1)
        if nhi > ohi:
            edge = tm[..., -1:]
            steps = np.arange(1, nhi - ohi + 1, dtype=np.int64) * ci
            tm = np.concatenate([tm, edge + steps], axis=-1)
        if nlo > olo:
            tm = tm[..., nlo - olo :]
        t = np.moveaxis(tm, -1, axis)
    return t


def _reshape_bw(
    t: np.ndarray, old: list[Window], new: list[Window], ci: int
) -> np.ndarray:
    """Move a backward tensor to lower windows (drop highs, extend lows)."""
    for axis, ((olo, ohi), (nlo, nhi)) in enumerate(zip(old, new)):
        if (olo, ohi) == (nlo, nhi):
            continue
        assert nlo <= olo and nhi <= ohi, (old, new)
        t = _closure_bw(t, axis, ci)
        tm = np.moveaxis(t, axis, -1)
        if nlo < olo:
            edge = tm[..., :1]
            steps = np.arange(olo - nlo, 0, -1, dtype=np.int64) * ci
            tm = np.concatenate([edge + steps, tm], axis=-1)
        if nhi < ohi:
            tm = tm[..., : tm.shape[-1] - (ohi - nhi)]
        t = np.moveaxis(tm, -1, axis)
    return t


@dataclass
class _Engine:
    groups: list[list[_Item]]  # items per speaker, in canonical order
    streams: list[_Stream]
    collar: float
    costs: CostScheme

    def __post_init__(self) -> None:
        self.timed = not math.isinf(self.collar)
        # Prefix maxima of consumed item end times and suffix minima of
        # remaining item begin times, per speaker; state windows follow.
        self._end_prefmax = []
        self._beg_sufmin = []
        for items in self.groups:
            ends = [-math.inf]
            for item in items:
                ends.append(max(ends[-1], item.max_end))
            self._end_prefmax.append(ends)
            begs = [math.inf]
            for item in reversed(items):
                begs.append(min(begs[-1], item.min_begin))
            self._beg_sufmin.append(begs[::-1])
        self._final = tuple(len(items) for items in self.groups)

    # -- windows --

    def _windows(self, state: tuple[int, ...]) -> list[Window]:
        if not self.timed:
            return [(0, len(s)) for s in self.streams]
        max_end = max(
            (self._end_prefmax[k][u] for k, u in enumerate(state)), default=-math.inf
        )
        future_begin = min(
            (self._beg_sufmin[k][u] for k, u in enumerate(state)), default=math.inf
        )
        windows = []
        for s in self.streams:
            n = len(s)
            if n == 0:
                windows.append((0, 0))
                continue
            # Words not matchable by anything consumed so far need not be
            # consumed yet; words not matchable by anything still to come
            # must eventually be insertions and are consumed eagerly.
            hi = int(np.searchsorted(s.beg_sufmin, max_end + self.collar, side="right"))
            lo = int(np.searchsorted(s.end_prefmax, future_begin - self.collar, side="left"))
            windows.append((lo, max(hi, lo)))
        return windows

    def _box(self, windows: list[Window]) -> int:
        cells = 1
        for lo, hi in windows:
            cells *= hi - lo + 1
        return cells

    # -- sweeps --

    def _dcost_rows(
        self, item: _Item, stream: _Stream, window: Window, backward: bool
    ) -> list[np.ndarray]:
        """Per item word, diagonal step cost over the window positions.

        Forward: position p consumes stream word p-1. Backward: position
        p consumes stream word p.
        """
        lo, hi = window
        cs, cc = self.costs.c_substitute, self.costs.c_correct
        pos = np.arange(lo, hi + 1)
        widx = pos if backward else pos - 1
        valid = (widx >= 0) & (widx < len(stream))
        w = widx[valid]
        rows = []
        for i in range(len(item.ids)):
            costs = np.where(stream.ids[w] == item.ids[i], cc, cs)
            if self.timed:
                feasible = (item.begins[i] - stream.ends[w] <= self.collar) & (
                    stream.begins[w] - item.ends[i] <= self.collar
                )
                costs = np.where(feasible, costs, INF)
            row = np.full(len(pos), INF, dtype=np.int64)
            row[valid] = costs
            rows.append(row)
        return rows

    def _sweep_fw(
        self, t: np.ndarray, axis: int, window: Window, item: _Item, stream: _Stream
    ) -> np.ndarray:
        ci, cd = self.costs.c_insert, self.costs.c_delete
        tm = np.moveaxis(t, axis, -1)
        pos = np.arange(window[0], window[1] + 1, dtype=np.int64) * ci
        cur = tm
        for dcost in self._dcost_rows(item, stream, window, backward=False):
            diag = np.empty_like(cur)
            diag[..., 0] = INF
            diag[..., 1:] = cur[..., :-1]
            base = np.minimum(cur + cd, diag + dcost)
            cur = np.minimum.accumulate(base - pos, axis=-1) + pos
        return np.moveaxis(cur, -1, axis)

    def _sweep_bw(
        self, t: np.ndarray, axis: int, window: Window, item: _Item, stream: _Stream
    ) -> np.ndarray:
        ci, cd = self.costs.c_insert, self.costs.c_delete
        tm = np.moveaxis(t, axis, -1)
        pos = np.arange(window[0], window[1] + 1, dtype=np.int64) * ci
        cur = tm
        rows = self._dcost_rows(item, stream, window, backward=True)
        for dcost in reversed(rows):
            diag = np.empty_like(cur)
            diag[..., -1] = INF
            diag[..., :-1] = cur[..., 1:]
            base = np.minimum(cur + cd, diag + dcost)
            suff = np.flip(np.minimum.accumulate(np.flip(base + pos, -1), axis=-1), -1)
            cur = suff - pos
        return np.moveaxis(cur, -1, axis)

    def _transition_fw(
        self,
        t: np.ndarray,
        windows: list[Window],
        item: _Item,
        axis: int,
        new_windows: list[Window],
    ) -> np.ndarray:
        expanded = [(w[0], nw[1]) for w, nw in zip(windows, new_windows)]
        t = _reshape_fw(t, windows, expanded, self.costs.c_insert)
        t = self._sweep_fw(t, axis, expanded[axis], item, self.streams[axis])
        return _reshape_fw(t, expanded, new_windows, self.costs.c_insert)

    def _transition_bw(
        self,
        t: np.ndarray,
        windows: list[Window],
        item: _Item,
        axis: int,
        new_windows: list[Window],
    ) -> np.ndarray:
        expanded = [(nw[0], w[1]) for w, nw in zip(windows, new_windows)]
        t = _reshape_bw(t, windows, expanded, self.costs.c_insert)
        t = self._sweep_bw(t, axis, expanded[axis], item, self.streams[axis])
        return _reshape_bw(t, expanded, new_windows, self.costs.c_insert)

    # -- state lattice --

    def _states_by_depth(self) -> list[list[tuple[int, ...]]]:
        lattice: list[list[tuple[int, ...]]] = [
            [] for _ in range(sum(self._final) + 1)
        ]
        for state in itertools.product(*(range(n + 1) for n in self._final)):
            lattice[sum(state)].append(state)
        for level in lattice:
            level.sort()
        return lattice

    def solve(self) -> tuple[int, list[tuple[int, int]]]:
        """Distance plus the committed (speaker, stream) choice sequence."""
        ci = self.costs.c_insert
        lattice = self._states_by_depth()

        # Backward pass: cost to finish from any joint position per state.
        final = self._final
        final_windows = self._windows(final)
        target = [(len(s), len(s)) for s in self.streams]
        ends = np.zeros((), dtype=np.int64)
        back: dict[tuple[int, ...], np.ndarray] = {}
        bw = np.zeros([hi - lo + 1 for lo, hi in final_windows], dtype=np.int64)
        for axis, (lo, hi) in enumerate(final_windows):
            n = len(self.streams[axis])
            shape = [1] * len(final_windows)
            shape[axis] = hi - lo + 1
            bw = bw + ((n - np.arange(lo, hi + 1, dtype=np.int64)) * ci).reshape(shape)
        back[final] = bw

        for depth in range(sum(final) - 1, -1, -1):
            for state in lattice[depth]:
                windows = self._windows(state)
                best: np.ndarray | None = None
                for k, items in enumerate(self.groups):
                    if state[k] >= len(items):
                        continue
                    nxt = state[:k] + (state[k] + 1,) + state[k + 1 :]
                    item = items[state[k]]
                    nxt_windows = self._windows(nxt)
                    for axis in range(len(self.streams)):
                        cand = self._transition_bw(
                            back[nxt], nxt_windows, item, axis, windows
                        )
                        best = cand if best is None else np.minimum(best, cand)
                assert best is not None
                back[state] = best

        # Forward commit: smallest (speaker, stream) choice that still
        # completes to the optimum, step by step.
        start = tuple(0 for _ in self.groups)
        start_windows = self._windows(start)
        t = _reshape_fw(
            np.zeros([1] * len(self.streams), dtype=np.int64),
            [(0, 0) for _ in self.streams],
            start_windows,
            ci,
        )
        optimum = int((t + back[start]).min())

        choices: list[tuple[int, int]] = []
        state, windows = start, start_windows
        while state != final:
            committed = False
            for k, items in enumerate(self.groups):
                if state[k] >= len(items):
                    continue
                nxt = state[:k] + (state[k] + 1,) + state[k + 1 :]
                item = items[state[k]]
                nxt_windows = self._windows(nxt)
                for axis in range(len(self.streams)):
                    cand = self._transition_fw(t, windows, item, axis, nxt_windows)
                    if int((cand + back[nxt]).min()) == optimum:
                        choices.append((k, axis))
                        t, state, windows = cand, nxt, nxt_windows
                        committed = True
                        break
                if committed:
                    break
            assert committed, "no transition reaches the optimum"
        distance = int(_reshape_fw(t, windows, target, ci).item())
        assert distance == optimum, (distance, optimum)
        return optimum, choices


# --- public metrics ---------------------------------------------------------


def _estimated_cells(engine: _Engine) -> int:
    """Rough DP work estimate for the complexity guard."""
    lens = [len(items) for items in engine.groups]
    words = [sum(len(i.ids) for i in items) for items in engine.groups]
    if engine.timed:
        # Walk the merged chain of items in canonical order to bound the
        # per-step window boxes.
        merged = sorted(
            (item for items in engine.groups for item in items), key=lambda i: i.index
        )
        chain = _Engine([merged], engine.streams, engine.collar, engine.costs)
        total = 0
        for u, item in enumerate(merged):
            box = chain._box(chain._windows((u + 1,)))
            total += max(len(item.ids), 1) * box
        states = 1
        for n in lens:
            states *= n + 1
        return total * max(1, states // (len(merged) + 1))
    box = 1
    for s in engine.streams:
        box *= len(s) + 1
    total = 0
    for k, n in enumerate(lens):
        other = 1
        for k2, n2 in enumerate(lens):
            if k2 != k:
                other *= n2 + 1
        total += words[k] * other
    return box * max(total, 1)


def _prepare(
    items_src: SegLst,
    item_mode: TimestampMode,
    stream_src: SegLst,
    stream_mode: TimestampMode,
    timed: bool,
    group_by_speaker: bool,
) -> tuple[list[list[_Item]], list[_Stream], list[int]]:
    """Build items (grouped or single-chain) and streams.

    Returns the groups, the streams sorted by label, and the canonical
    segment index of every item in group-major order.
    """
    vocab = _Vocab()
    items = [
        _make_item(i, segment_tokens(seg, item_mode, timed), vocab, timed)
        for i, seg in enumerate(items_src)
    ]
    if group_by_speaker:
        labels = sorted({seg.label for seg in items_src})
        by_label: dict[str, list[_Item]] = {label: [] for label in labels}
        for item, seg in zip(items, items_src):
            by_label[seg.label].append(item)
        groups = [by_label[label] for label in labels]
    else:
        groups = [items]

    stream_labels = stream_src.labels()
    if stream_labels:
        streams = []
        for label in stream_labels:
            tokens: list[WordToken] = []
            for seg in stream_src.by_label(label):
                tokens.extend(segment_tokens(seg, stream_mode, timed))
            streams.append(_make_stream(label, tokens, vocab, timed))
    else:
        # No observed streams: a single empty pseudo-stream keeps the
        # assignment well defined (everything scores as deletions).
        streams = [_make_stream(None, [], vocab, timed)]
    item_indices = [item.index for group in groups for item in group]
    return groups, streams, item_indices


def _pair_result(
    ref_tokens: Sequence[WordToken], hyp_tokens: Sequence[WordToken], collar: float
) -> LevResult:
    if math.isinf(collar):
        return lev([t.word for t in ref_tokens], [t.word for t in hyp_tokens])
    return tc_lev(ref_tokens, hyp_tokens, collar, require_sorted=False)


def _run_engine(
    groups: list[list[_Item]],
    streams: list[_Stream],
    collar: float,
    cell_budget: int,
    n_items: int,
) -> tuple[int, StreamAssignment, dict[str | None, list[WordToken]]]:
    """Solve the assignment and collect per-stream assigned token lists."""
    engine = _Engine(groups, streams, collar, UNIT_COSTS)
    estimate = _estimated_cells(engine)
    if estimate > cell_budget:
        raise ComplexityGuardExceeded(
            f"estimated {estimate:.2e} DP cells exceeds the budget of "
            f"{cell_budget:.2e}; use a time-constrained variant or the "
            "greedy approximation, or raise cell_budget"
        )
    distance, choices = engine.solve()

    labels: list[str | None] = [None] * n_items
    order: list[int] = []
    assigned: dict[str | None, list[WordToken]] = {s.label: [] for s in streams}
    pointers = [0] * len(groups)
    for k, axis in choices:
        item = groups[k][pointers[k]]
        pointers[k] += 1
        labels[item.index] = streams[axis].label
        order.append(item.index)
        assigned[streams[axis].label].extend(item.tokens)
    return distance, StreamAssignment(tuple(labels), tuple(order)), assigned


def _assignment_metric(
    items_src: SegLst,
    item_mode: TimestampMode,
    stream_src: SegLst,
    stream_mode: TimestampMode,
    collar: float,
    cell_budget: int,
    group_by_speaker: bool,
    swap_orientation: bool,
) -> AssignmentResult:
    timed = not math.isinf(collar)
    groups, streams, _ = _prepare(
        items_src, item_mode, stream_src, stream_mode, timed, group_by_speaker
    )
    distance, assignment, assigned = _run_engine(
        groups, streams, collar, cell_budget, len(items_src)
    )

    counts = ErrorCounts()
    traces: dict[str | None, AlignmentTrace] = {}
    rescored = 0
    for stream in streams:
        if swap_orientation:
            # DI-cp: the fixed side is the true reference, the assigned
            # side the hypothesis; insertions/deletions follow suit.
            result = _pair_result(stream.tokens, assigned[stream.label], collar)
        else:
            result = _pair_result(assigned[stream.label], stream.tokens, collar)
        counts = counts + result.counts
        traces[stream.label] = result.trace
        rescored += result.distance
    assert rescored == distance, (rescored, distance)
    return AssignmentResult(counts, assignment, traces, distance)


def orc_wer(
    ref: SegLst,
    hyp: SegLst,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> AssignmentResult:
    """Optimal reference combination WER.

    Assigns each reference utterance to one hypothesis stream, keeping
    the global utterance order, so that the summed per-stream distance
    is minimal. With a finite collar this is the time-constrained
    variant.
    """
    ref = validate(ref)
    hyp = validate(hyp)
    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    return _assignment_metric(
        ref, ref_mode, hyp, hyp_mode, collar, cell_budget,
        group_by_speaker=False, swap_orientation=False,
    )


def mimo_wer(
    ref: SegLst,
    hyp: SegLst,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> AssignmentResult:
    """Generalized ORC-WER that only keeps each speaker's own order.

    Utterances of different reference speakers may be reordered relative
    to each other; a single global emission order consistent with every
    speaker's order and every stream's order must still exist, which
    rules out circular assignments.
    """
    ref = validate(ref)
    hyp = validate(hyp)
    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    return _assignment_metric(
        ref, ref_mode, hyp, hyp_mode, collar, cell_budget,
        group_by_speaker=True, swap_orientation=False,
    )


def di_cp_wer(
    ref: SegLst,
    hyp: SegLst,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> AssignmentResult:
    """Diarization-invariant cpWER.

    The ORC search with reference and hypothesis roles swapped:
    hypothesis segments are relabeled onto reference speakers so that
    the summed distance is minimal. Counts and the denominator stay
    oriented to the true reference, so this lower-bounds cpWER and is
    invariant to any relabeling of the hypothesis.
    """
    ref = validate(ref)
    hyp = validate(hyp)
    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    return _assignment_metric(
        hyp, hyp_mode, ref, ref_mode, collar, cell_budget,
        group_by_speaker=False, swap_orientation=True,
    )


def brute_force_oracle(
    ref: SegLst,
    hyp: SegLst,
    mode: str,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    max_items: int = 6,
    max_targets: int = 3,
) -> int:
    """Minimum distance by enumerating every admissible assignment.

    ``mode`` is one of ``orc``, ``mimo``, ``di_cp``. Exponential; only
    for testing small instances.
    """
    ref = validate(ref)
    hyp = validate(hyp)
    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    timed = not math.isinf(collar)

    if mode in ("orc", "mimo"):
        item_segs, item_mode = ref, ref_mode
        target_src, target_mode = hyp, hyp_mode
    elif mode == "di_cp":
        item_segs, item_mode = hyp, hyp_mode
        target_src, target_mode = ref, ref_mode
    else:
        raise ValueError(f"unknown mode {mode!r}")

    target_labels: list[str | None] = list(target_src.labels()) or [None]
    targets = {
        label: [
            t
            for seg in (target_src.by_label(label) if label is not None else [])
            for t in segment_tokens(seg, target_mode, timed)
        ]
        for label in target_labels
    }
    items = [segment_tokens(seg, item_mode, timed) for seg in item_segs]
    if len(items) > max_items or len(target_labels) > max_targets:
        raise TooLarge(
            f"{len(items)} items x {len(target_labels)} targets exceeds the "
            f"oracle limits ({max_items} x {max_targets})"
        )

    if mode == "mimo":
        by_speaker: dict[str, list[int]] = {}
        for i, seg in enumerate(item_segs):
            by_speaker.setdefault(seg.label, []).append(i)
        orders = [
            [i for _, i in merged]
            for merged in _interleavings(list(by_speaker.values()))
        ]
    else:
        orders = [list(range(len(items)))]

    # Assignments share concatenations heavily; memoize pair distances.
    cache: dict[tuple, int] = {}

    def pair_distance(concat: tuple[WordToken, ...], label: str | None) -> int:
        key = (concat, label)
        if key not in cache:
            cache[key] = _pair_result(list(concat), targets[label], collar).distance
        return cache[key]

    best = None
    for order in orders:
        for labels in itertools.product(target_labels, repeat=len(items)):
            total = 0
            for label in target_labels:
                concat = tuple(
                    t for i in order if labels[i] == label for t in items[i]
                )
                total += pair_distance(concat, label)
            if best is None or total < best:
                best = total
    assert best is not None
    return best


def _interleavings(sequences: list[list[int]]):
    """Merge orders keeping each sequence's internal order."""
    if not any(sequences):
        yield ()
        return
    for k, seq in enumerate(sequences):
        if seq:
            rest = sequences[:k] + [seq[1:]] + sequences[k + 1 :]
            for tail in _interleavings(rest):
                yield ((k, seq[0]),) + tail
