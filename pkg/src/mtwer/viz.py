"""Interactive trace-alignment pages.

Per session, a metric's word-level alignment is flattened into a plain
document: the reference words, the hypothesis words, and one match
record per edit operation. Matched words are meant to be drawn on a
shared time axis and connected with lines; insertions and deletions
stay unconnected. The document is embedded into a single self-contained
HTML file together with the viewer bundle, so reports open offline; when
the viewer bundle has not been built, a placeholder page carrying the
same embedded document is emitted instead.
"""

from __future__ import annotations

import html
import json
from importlib import resources
from pathlib import Path
from typing import Any

from .levenshtein import EditOp
from .report import PlainResult
from .seglst import SegLst, TsModeArg, resolve_ts_modes, segment_tokens, validate
from .speaker_attributed import CpResult, DaResult
from .stream_assignment import AssignmentResult

#: Metrics whose assignment relabels the hypothesis side.
_HYP_RELABELING = ("dicpwer", "ditcpwer", "greedy-dicpwer")


def _word_table(seglst: SegLst, mode) -> tuple[list[dict], list[list[int]], dict[str, list[int]]]:
    """Flatten a transcript to word records plus segment/label index maps."""
    words: list[dict] = []
    by_segment: list[list[int]] = []
    by_label: dict[str, list[int]] = {}
    for segment in seglst:
        if segment.has_times:
            tokens = segment_tokens(segment, mode, timed=True)
        else:
            tokens = segment_tokens(segment, mode, timed=False)
        ids = []
        for token in tokens:
            ids.append(len(words))
            words.append(
                {
                    "word": token.word,
                    "begin": token.begin_time,
                    "end": token.end_time,
                    "label": segment.label,
                }
            )
        by_segment.append(ids)
        by_label.setdefault(segment.label, []).extend(ids)
    return words, by_segment, by_label


def _match(op: EditOp, ref_ids: list[int], hyp_ids: list[int]) -> dict[str, Any]:
    record: dict[str, Any] = {"kind": op.kind.value}
    if op.ref_index is not None:
        record["ref_index"] = ref_ids[op.ref_index]
    if op.hyp_index is not None:
        record["hyp_index"] = hyp_ids[op.hyp_index]
    return record


def build_alignment_document(
    session_id: str,
    ref: SegLst,
    hyp: SegLst,
    result,
    metric: str,
    ts_mode: TsModeArg = None,
) -> dict[str, Any]:
    """Word-level alignment document for one scored session."""
    ref = validate(ref)
    hyp = validate(hyp)
    ref_mode, hyp_mode = resolve_ts_modes(ts_mode)
    ref_words, ref_by_segment, ref_by_label = _word_table(ref, ref_mode)
    hyp_words, hyp_by_segment, hyp_by_label = _word_table(hyp, hyp_mode)
    assigned: list[str | None] = [None] * len(hyp_words)
    matches: list[dict[str, Any]] = []

    if isinstance(result, (CpResult, DaResult)):
        stream_to_speaker = result.mapping.hyp_to_ref()
        for i, segment in enumerate(hyp):
            for wid in hyp_by_segment[i]:
                assigned[wid] = stream_to_speaker.get(segment.label)
        for (r, h), trace in result.traces.items():
            ref_ids = ref_by_label.get(r, []) if r is not None else []
            hyp_ids = hyp_by_label.get(h, []) if h is not None else []
            matches.extend(_match(op, ref_ids, hyp_ids) for op in trace)
    elif isinstance(result, AssignmentResult) and metric in _HYP_RELABELING:
        labels = result.assignment.labels
        for i in range(len(hyp_by_segment)):
            for wid in hyp_by_segment[i]:
                assigned[wid] = labels[i]
        for speaker, trace in result.traces.items():
            ref_ids = ref_by_label.get(speaker, []) if speaker is not None else []
            hyp_ids = [
                wid
                for i in result.assignment.order
                if labels[i] == speaker
                for wid in hyp_by_segment[i]
            ]
            matches.extend(_match(op, ref_ids, hyp_ids) for op in trace)
    elif isinstance(result, AssignmentResult):
        labels = result.assignment.labels
        for stream, trace in result.traces.items():
            ref_ids = [
                wid
                for i in result.assignment.order
                if labels[i] == stream
                for wid in ref_by_segment[i]
            ]
            hyp_ids = hyp_by_label.get(stream, []) if stream is not None else []
            matches.extend(_match(op, ref_ids, hyp_ids) for op in trace)
    elif isinstance(result, PlainResult):
        ref_ids = [wid for ids in ref_by_segment for wid in ids]
        hyp_ids = [wid for ids in hyp_by_segment for wid in ids]
        matches.extend(_match(op, ref_ids, hyp_ids) for op in result.trace)
    else:
        raise TypeError(f"cannot visualize result of type {type(result).__name__}")

    return {
        "session_id": session_id,
        "metric": metric,
        "ref_words": [
            {"word": w["word"], "begin": w["begin"], "end": w["end"], "speaker": w["label"]}
            for w in ref_words
        ],
        "hyp_words": [
            {
                "word": w["word"],
                "begin": w["begin"],
                "end": w["end"],
                "stream": w["label"],
                "assigned_speaker": assigned[i],
            }
            for i, w in enumerate(hyp_words)
        ],
        "matches": matches,
    }


_PLACEHOLDER_JS = """
(function () {
  var data = JSON.parse(document.getElementById('alignment-data').textContent);
  var app = document.getElementById('app');
  var out = ['<h1>Alignment report</h1>',
    '<p>The interactive viewer bundle is not built; the alignment ',
    'documents are embedded in this page and readable below.</p>'];
  data.forEach(function (doc) {
    out.push('<h2>' + doc.session_id + ' (' + doc.metric + ')</h2>');
    out.push('<p>' + doc.ref_words.length + ' reference words, '
      + doc.hyp_words.length + ' hypothesis words, '
      + doc.matches.length + ' match records</p>');
  });
  app.innerHTML = out.join('');
})();
"""

_TEMPLATE = """<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>{title}</title>
<style>
  body {{ font-family: system-ui, sans-serif; margin: 1rem; }}
</style>
</head>
<body>
<div id="app"></div>
<script id="alignment-data" type="application/json">{data}</script>
<script>{script}</script>
</body>
</html>
"""


def bundled_viewer_js() -> str | None:
    """The built viewer bundle, if it is packaged."""
    try:
        asset = resources.files("mtwer").joinpath("assets/viewer.js")
        if asset.is_file():
            return asset.read_text(encoding="utf-8")
    except (FileNotFoundError, ModuleNotFoundError):
        pass
    return None


def emit_alignment_html(
    documents: list[dict[str, Any]],
    out_path: str | Path,
    viewer_js: str | None = None,
    title: str = "Alignment viewer",
) -> Path:
    """Write a self-contained alignment page.

    ``viewer_js`` overrides the packaged viewer bundle; without either,
    a placeholder page with the embedded documents is written.
    """
    script = viewer_js if viewer_js is not None else bundled_viewer_js()
    if script is None:
        script = _PLACEHOLDER_JS
    data = json.dumps(documents).replace("</", "<\\/")
    out_path = Path(out_path)
    out_path.write_text(
        _TEMPLATE.format(title=html.escape(title), data=data, script=script),
        encoding="utf-8",
    )
    return out_path
