"""Greedy polynomial-time approximation to DI-cpWER and ORC-WER.

Starting from the mapping chosen by cpWER, the search sweeps over the
segments of the reassigned side in time order and relabels a segment
whenever that strictly lowers the summed per-target distance, until a
full sweep changes nothing. Because single moves are cost-neutral
exactly when two segments would have to swap labels, the search first
runs with a substitution cost of 2 (a substitution trades for an
insertion plus a deletion, making such swaps improving) and then with
the standard cost of 1.

Two implementations produce bit-identical results: a naive one that
recomputes the summed distance for every candidate move (the reference
for testing) and an incremental one that maintains, per target, a
forward distance column up to the sweep position plus precomputed
suffix columns, so evaluating a move touches only the affected target
and costs one segment's worth of column updates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InconsistentState, SweepLimitExceeded
from .levenshtein import (
    UNBOUNDED,
    AlignmentTrace,
    ErrorCounts,
    UNIT_COSTS,
    combine_columns,
    extend_column,
    lev,
    suffix_columns,
    tc_lev,
)
from .seglst import SegLst, TsModeArg, WordToken, resolve_ts_modes, segment_tokens, validate
from .speaker_attributed import _activity_timeline, _overlap_duration, cp_wer
from .stream_assignment import AssignmentResult, StreamAssignment


@dataclass(frozen=True)
class GreedyConfig:
    """Substitution cost per search phase plus a non-termination guard.

    Each phase cost must lie in ``(c_correct, c_insert + c_delete]``;
    the default (2, 1) runs the swap-breaking phase first.
    """

    phase_costs: tuple[int, ...] = (2, 1)
    max_sweeps: int = 100

    def __post_init__(self) -> None:
        costs = UNIT_COSTS
        for cs in self.phase_costs:
            if not costs.c_correct < cs <= costs.c_insert + costs.c_delete:
                raise ValueError(
                    f"phase substitution cost {cs} outside "
                    f"({costs.c_correct}, {costs.c_insert + costs.c_delete}]"
                )
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be positive")


TokenPair = tuple[str, tuple[float, float] | None]


def _pairs(tokens: list[WordToken], timed: bool) -> list[TokenPair]:
    if not timed:
        return [(t.word, None) for t in tokens]
    return [(t.word, (t.begin_time, t.end_time)) for t in tokens]


class StreamMatrices:
    """Per-target forward/suffix column store for one greedy sweep.

    Valid while items at positions >= ``position`` keep the labels the
    store was built with; the sweep advances the position one item at a
    time and only relabels the current item.
    """

    def __init__(
        self,
        targets: dict[str | None, list[TokenPair]],
        items: list[list[TokenPair]],
        labels: list[str | None],
        cs: int,
        collar: float,
    ) -> None:
        if len(items) != len(labels):
            raise InconsistentState("one label per item required")
        if any(label not in targets for label in labels):
            raise InconsistentState("label not among targets")
        self.targets = targets
        self.items = items
        self.labels = list(labels)
        self.cs = cs
        self.collar = collar
        self.position = 0
        self._fw = {
            label: [r * UNIT_COSTS.c_delete for r in range(len(fixed) + 1)]
            for label, fixed in targets.items()
        }
        # Build-time word offset of the suffix following each item, per
        # target, plus the suffix distance columns themselves.
        self._suffix: dict[str | None, list[list[int]]] = {}
        self._off_after: dict[str | None, list[int]] = {}
        for label, fixed in targets.items():
            var: list[TokenPair] = []
            offsets = []
            for item, item_label in zip(items, labels):
                if item_label == label:
                    var.extend(item)
                offsets.append(len(var))
            self._suffix[label] = suffix_columns(fixed, var, UNIT_COSTS, cs, collar)
            self._off_after[label] = offsets

    def distance_with(self, index: int, label: str | None) -> int:
        """Summed-target contribution of target ``label`` with the item on it."""
        self._check(index, label)
        extended = extend_column(
            self._fw[label], self.targets[label], self.items[index], UNIT_COSTS, self.cs, self.collar
        )
        return combine_columns(extended, self._suffix[label][self._off_after[label][index]])

    def distance_without(self, index: int, label: str | None) -> int:
        """Contribution of target ``label`` with the item removed from it."""
        self._check(index, label)
        return combine_columns(
            self._fw[label], self._suffix[label][self._off_after[label][index]]
        )

    def advance(self, label: str | None) -> None:
        """Fix the current item's label and move the sweep position on."""
        index = self.position
        self._check(index, label)
        self.labels[index] = label
        self._fw[label] = extend_column(
            self._fw[label], self.targets[label], self.items[index], UNIT_COSTS, self.cs, self.collar
        )
        self.position += 1

    def _check(self, index: int, label: str | None) -> None:
        if index != self.position:
            raise InconsistentState(f"store is at item {self.position}, asked about {index}")
        if label not in self.targets:
            raise InconsistentState(f"unknown target {label!r}")


def incremental_move_delta(
    state: StreamMatrices, index: int, from_label: str | None, to_label: str | None
) -> int:
    """Total cost change of relabeling item ``index`` between targets.

    Only the two affected targets are touched; all other contributions
    cancel.
    """
    if state.labels[index] != from_label:
        raise InconsistentState(
            f"item {index} is labeled {state.labels[index]!r}, not {from_label!r}"
        )
    if from_label == to_label:
        return 0
    gain = state.distance_with(index, to_label) - state.distance_without(index, to_label)
    loss = state.distance_without(index, from_label) - state.distance_with(index, from_label)
    return gain + loss


def _total_distance(
    targets: dict[str | None, list[TokenPair]],
    items: list[list[TokenPair]],
    labels: list[str | None],
    cs: int,
    collar: float,
) -> int:
    total = 0
    for label, fixed in targets.items():
        col = [r * UNIT_COSTS.c_delete for r in range(len(fixed) + 1)]
        for item, item_label in zip(items, labels):
            if item_label == label:
                col = extend_column(col, fixed, item, UNIT_COSTS, cs, collar)
        total += col[len(fixed)]
    return total


def _sweep_naive(targets, items, labels, cs, collar, order) -> tuple[list, bool]:
    changed = False
    labels = list(labels)
    for index in order:
        incumbent = labels[index]
        best_label, best_value = incumbent, _total_distance(targets, items, labels, cs, collar)
        for label in sorted(targets, key=lambda x: (x is None, x)):
            if label == incumbent:
                continue
            candidate = labels[:index] + [label] + labels[index + 1 :]
            value = _total_distance(targets, items, candidate, cs, collar)
            if value < best_value:
                best_label, best_value = label, value
        if best_label != incumbent:
            labels[index] = best_label
            changed = True
    return labels, changed


def _sweep_incremental(targets, items, labels, cs, collar, order) -> tuple[list, bool]:
    state = StreamMatrices(targets, items, labels, cs, collar)
    changed = False
    for index in order:
        incumbent = state.labels[index]
        best_label = incumbent
        best_value = incremental_move_delta(state, index, incumbent, incumbent)
        for label in sorted(targets, key=lambda x: (x is None, x)):
            if label == incumbent:
                continue
            value = incremental_move_delta(state, index, incumbent, label)
            if value < best_value:
                best_label, best_value = label, value
        if best_label != incumbent:
            changed = True
        state.advance(best_label)
    return state.labels, changed


def _search(
    targets: dict[str | None, list[TokenPair]],
    items: list[list[TokenPair]],
    labels: list[str | None],
    config: GreedyConfig,
    collar: float,
    implementation: str,
) -> list[str | None]:
    sweep = {"naive": _sweep_naive, "incremental": _sweep_incremental}[implementation]
    order = list(range(len(items)))
    for cs in config.phase_costs:
        for _ in range(config.max_sweeps):
            labels, changed = sweep(targets, items, labels, cs, collar, order)
            if not changed:
                break
        else:
            raise SweepLimitExceeded(
                f"no stable assignment within {config.max_sweeps} sweeps"
            )
    return labels


def _overlap_init(
    unmatched_labels: list[str],
    source: SegLst,
    target_labels: list[str],
    target_side: SegLst,
) -> dict[str, str]:
    """Fallback initialization: map to the target with maximal overlap."""
    mapping = {}
    timed = all(s.has_times for s in source) and all(s.has_times for s in target_side)
    for label in unmatched_labels:
        if timed and target_labels:
            own = _activity_timeline(source, label)
            best = max(
                target_labels,
                key=lambda t: (_overlap_duration(own, _activity_timeline(target_side, t)), ),
            )
            # max() keeps the first maximum; target_labels is sorted.
            mapping[label] = best
        elif target_labels:
            mapping[label] = target_labels[0]
    return mapping


def _greedy(
    ref: SegLst,
    hyp: SegLst,
    collar: float,
    ts_mode: TsModeArg,
    config: GreedyConfig,
    relabel_hypothesis: bool,
    implementation: str,
) -> AssignmentResult:
    ref = validate(ref)
    hyp = validate(hyp)
    config = config or GreedyConfig()
    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    timed = not math.isinf(collar)

    if relabel_hypothesis:
        item_src, item_mode = hyp, hyp_mode
        target_src, target_mode = ref, ref_mode
    else:
        item_src, item_mode = ref, ref_mode
        target_src, target_mode = hyp, hyp_mode

    target_labels = target_src.labels()
    targets: dict[str | None, list[TokenPair]] = {}
    target_tokens: dict[str | None, list[WordToken]] = {}
    for label in target_labels or [None]:
        tokens = [
            t
            for s in (target_src.by_label(label) if label is not None else [])
            for t in segment_tokens(s, target_mode, timed)
        ]
        target_tokens[label] = tokens
        targets[label] = _pairs(tokens, timed)

    item_tokens = [segment_tokens(s, item_mode, timed) for s in item_src]
    items = [_pairs(tokens, timed) for tokens in item_tokens]

    # Initial labels from the cpWER mapping; labels it leaves unmatched
    # fall back to the target with maximal temporal overlap.
    initial: list[str | None]
    if target_labels:
        mapping = cp_wer(ref, hyp, collar, ts_mode).mapping
        if relabel_hypothesis:
            to_target = {h: r for r, h in mapping.pairs if h is not None and r is not None}
        else:
            to_target = {r: h for r, h in mapping.pairs if r is not None and h is not None}
        unmatched = sorted({s.label for s in item_src} - set(to_target))
        to_target.update(_overlap_init(unmatched, item_src, target_labels, target_src))
        initial = [to_target[s.label] for s in item_src]
    else:
        initial = [None] * len(item_src)

    final = _search(targets, items, initial, config, collar, implementation)

    counts = ErrorCounts()
    traces: dict[str | None, AlignmentTrace] = {}
    distance = 0
    for label in targets:
        assigned: list[WordToken] = []
        for tokens, item_label in zip(item_tokens, final):
            if item_label == label:
                assigned.extend(tokens)
        if relabel_hypothesis:
            ref_side, hyp_side = target_tokens[label], assigned
        else:
            ref_side, hyp_side = assigned, target_tokens[label]
        if timed:
            result = tc_lev(ref_side, hyp_side, collar, require_sorted=False)
        else:
            result = lev([t.word for t in ref_side], [t.word for t in hyp_side])
        counts = counts + result.counts
        traces[label] = result.trace
        distance += result.distance
    assignment = StreamAssignment(tuple(final), tuple(range(len(item_src))))
    return AssignmentResult(counts, assignment, traces, distance)


def greedy_di_cp(
    ref: SegLst,
    hyp: SegLst,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    config: GreedyConfig | None = None,
    implementation: str = "incremental",
) -> AssignmentResult:
    """Greedy approximation to (tc)DI-cpWER.

    Hypothesis segments are relabeled onto reference speakers. The
    result is an upper bound on the exact DI-cp distance.
    """
    return _greedy(
        ref, hyp, collar, ts_mode, config or GreedyConfig(),
        relabel_hypothesis=True, implementation=implementation,
    )


def greedy_orc(
    ref: SegLst,
    hyp: SegLst,
    collar: float = UNBOUNDED,
    ts_mode: TsModeArg = None,
    config: GreedyConfig | None = None,
    implementation: str = "incremental",
) -> AssignmentResult:
    """Greedy approximation to (tc)ORC-WER.

    Reference utterances are relabeled onto hypothesis streams; the
    role-swapped twin of :func:`greedy_di_cp`.
    """
    return _greedy(
        ref, hyp, collar, ts_mode, config or GreedyConfig(),
        relabel_hypothesis=False, implementation=implementation,
    )
