"""Command-line interface.

One subcommand per metric plus ``align`` for emitting the interactive
alignment page. Exit codes: 0 on success, 1 on data errors (malformed
files, missing timestamps, infeasible instances), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .errors import MtwerError
from .formats import FORMATS, load_transcript
from .levenshtein import UNBOUNDED
from .report import DEFAULT_COLLAR, METRICS, Report, score_session, score_sessions
from .seglst import SegLst, TimestampMode
from .viz import build_alignment_document, emit_alignment_html

_TC_METRICS = ("tcpwer", "tcorcwer", "tcmimower", "ditcpwer")
_GREEDY_METRICS = ("greedy-dicpwer", "greedy-orcwer")
_WL_METRICS = tuple(name for name, (_, wl) in METRICS.items() if wl)


def _add_io_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ref", required=True, help="reference transcript file")
    parser.add_argument("--hyp", required=True, help="hypothesis transcript file")
    parser.add_argument(
        "--ref-format", choices=FORMATS, help="override the format inferred from --ref"
    )
    parser.add_argument(
        "--hyp-format", choices=FORMATS, help="override the format inferred from --hyp"
    )
    parser.add_argument(
        "--word-timestamps",
        choices=[mode.value for mode in TimestampMode],
        help="pseudo word timestamp mode for both sides (default: "
        "character_based for the reference, character_based_points for "
        "the hypothesis)",
    )
    parser.add_argument("--out", help="output path (default: standard output)")
    parser.add_argument(
        "--per-session",
        action="store_true",
        help="also print a per-session summary table",
    )
    parser.add_argument(
        "--workers", type=int, default=1, help="sessions scored in parallel"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtwer",
        description="Word error rates for long-form multi-talker transcripts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    descriptions = {
        "wer": "single-stream WER over concatenated segments",
        "cpwer": "concatenated minimum-permutation WER",
        "tcpwer": "time-constrained cpWER",
        "dawer": "WER under the diarization-optimal speaker mapping",
        "orcwer": "optimal reference combination WER",
        "tcorcwer": "time-constrained ORC-WER",
        "mimower": "MIMO-WER (per-speaker order constraint only)",
        "tcmimower": "time-constrained MIMO-WER",
        "dicpwer": "diarization-invariant cpWER",
        "ditcpwer": "time-constrained DI-cpWER",
        "greedy-dicpwer": "greedy approximation to (tc)DI-cpWER",
        "greedy-orcwer": "greedy approximation to (tc)ORC-WER",
    }
    for name in METRICS:
        p = sub.add_parser(name, help=descriptions[name])
        _add_io_arguments(p)
        if name in _TC_METRICS:
            p.add_argument(
                "--collar",
                type=float,
                default=DEFAULT_COLLAR,
                help="maximum temporal distance for correct/substitution "
                "matches (seconds, default 5)",
            )
        elif name in _GREEDY_METRICS:
            p.add_argument(
                "--collar",
                type=float,
                default=UNBOUNDED,
                help="optional collar; finite values give the "
                "time-constrained variant (default: unbounded)",
            )
        if name in _WL_METRICS:
            p.add_argument(
                "--word-level",
                action="store_true",
                help="explode segments to one word each before assignment",
            )

    p = sub.add_parser("align", help="emit an interactive alignment page")
    _add_io_arguments(p)
    p.add_argument(
        "--metric", choices=sorted(METRICS), default="dicpwer",
        help="alignment to visualize (default: dicpwer)",
    )
    p.add_argument("--collar", type=float, help="collar for time-constrained metrics")
    p.add_argument(
        "--word-level", action="store_true",
        help="explode segments to one word each before assignment",
    )
    return parser


def _resolve_collar(args: argparse.Namespace, parser: argparse.ArgumentParser) -> float:
    metric = getattr(args, "metric", args.command)
    collar = getattr(args, "collar", None)
    if metric in _TC_METRICS:
        return DEFAULT_COLLAR if collar is None else collar
    if metric in _GREEDY_METRICS:
        return UNBOUNDED if collar is None else collar
    if collar is not None and not math.isinf(collar):
        parser.error(f"--collar requires a time-constrained metric, not {metric!r}")
    return UNBOUNDED


def _ts_mode(args: argparse.Namespace) -> TimestampMode | None:
    return TimestampMode(args.word_timestamps) if args.word_timestamps else None


def _print_per_session(report: Report, stream) -> None:
    print(f"{'session':<24} {'error_rate':>10} {'errors':>7} {'length':>7}", file=stream)
    for s in report.sessions:
        rate = "n/a" if s.counts.error_rate is None else f"{s.counts.error_rate:.4f}"
        print(
            f"{s.session_id:<24} {rate:>10} {s.counts.errors:>7} {s.counts.ref_length:>7}",
            file=stream,
        )


def _run_metric(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    refs = load_transcript(args.ref, args.ref_format)
    hyps = load_transcript(args.hyp, args.hyp_format)
    report = score_sessions(
        args.command,
        refs,
        hyps,
        collar=_resolve_collar(args, parser),
        ts_mode=_ts_mode(args),
        word_level=getattr(args, "word_level", False),
        workers=args.workers,
    )
    text = json.dumps(report.to_dict(), indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    if args.per_session:
        _print_per_session(report, sys.stderr if not args.out else sys.stdout)
    return 0


def _run_align(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    refs = load_transcript(args.ref, args.ref_format)
    hyps = load_transcript(args.hyp, args.hyp_format)
    collar = _resolve_collar(args, parser)
    ts_mode = _ts_mode(args)
    documents = []
    for sid in sorted(set(refs) | set(hyps)):
        ref = refs.get(sid, SegLst())
        hyp = hyps.get(sid, SegLst())
        result = score_session(
            args.metric, ref, hyp,
            collar=collar, ts_mode=ts_mode, word_level=args.word_level,
        )
        documents.append(
            build_alignment_document(sid, ref, hyp, result, args.metric, ts_mode)
        )
    out = emit_alignment_html(documents, args.out or "alignment.html")
    print(out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "align":
            return _run_align(args, parser)
        return _run_metric(args, parser)
    except SystemExit as e:  # parser.error inside command handling
        return int(e.code or 0)
    except MtwerError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
