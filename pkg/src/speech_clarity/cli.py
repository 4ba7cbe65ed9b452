"""Command-line orchestration: load a run manifest, run the pipeline
stages, emit JSON reports and plot-ready CSVs.

Exit codes: 0 success, 2 malformed input, 3 internal invariant violation.
Diagnostics go to stderr; data only to files.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import classify as _classify
from . import pipeline
from .annotations import ErrorClass
from .clarity import severity_of
from .errors import InputError, UnparseableExactError, ZeroVariance
from .stats import normalized_euclidean, pearson

_SEVERITY_ORDINAL = {"Mild": 1, "Moderate": 2, "Severe": 3}


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def _write_json(path: Path, obj) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write("\n")


def _write_csv(path: Path, header, rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _fmt(v) -> str:
    return "" if v is None else f"{v:.6f}"


def _apply_cli_options(manifest, args):
    if args.lexicon:
        manifest.lexicon_path = args.lexicon
    if args.override_labels:
        manifest.override_path = args.override_labels
    o = manifest.options
    if args.abs_threshold is not None:
        o.abs_threshold = args.abs_threshold
    if args.rel_threshold is not None:
        o.rel_threshold = args.rel_threshold
    if args.sim_threshold is not None:
        o.sim_threshold = args.sim_threshold
    if args.grouping:
        o.grouping = args.grouping
    if o.abs_threshold <= 0 or o.rel_threshold <= 0 or o.sim_threshold < 0:
        raise InputError("thresholds must be positive")


def _align_all(manifest, jobs):
    # Compute every speaker before writing anything, so a malformed input
    # leaves no partial output behind.
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(pipeline.run_alignment_stage, manifest.speakers))


def _clarity_payload(res):
    payload = {
        "id": res.entry.id,
        "source": res.source,
        "ref_word_count": res.clarity.ref_word_count,
        "substitutions": res.clarity.substitutions,
        "deletions": res.clarity.deletions,
        "insertions": res.clarity.insertions,
        "wer": res.clarity.wer,
        "clarity_asr": res.clarity.clarity_asr,
        "clarity_pct": res.clarity.clarity_pct,
        "severity": res.clarity.severity.value,
        "therapist": None,
    }
    if res.therapist_clarity_pct is not None:
        pct = res.therapist_clarity_pct
        payload["therapist"] = {
            "words_in_error": res.entry.words_in_error,
            "clarity_pct": pct,
            "severity": severity_of(pct).value,
        }
    return payload


def cmd_clarity(manifest, out: Path, jobs: int) -> int:
    results = _align_all(manifest, jobs)
    for res in results:
        _write_json(out / "clarity" / f"{res.entry.id}.json", _clarity_payload(res))
    return 0


def _detection_payload(det):
    payload = {
        "start_s": det.start_s,
        "end_s": det.end_s,
        "ref_text": det.ref_text,
        "hyp_text": det.hyp_text,
        "ops": [{"kind": op.kind.value,
                 "ref_index": op.ref_index,
                 "hyp_index": op.hyp_index} for op in det.ops],
    }
    if det.asr_class is not None:
        payload["asr_class"] = det.asr_class.value
    return payload


def _metrics_payload(m):
    return {
        "tp": m.tp,
        "fp": m.fp,
        "fn": m.fn,
        "precision": m.precision,
        "recall": m.recall,
        "f_score": m.f_score,
        "per_class_recall": {cls.value: v for cls, v in m.per_class_recall.items()},
        "vacuous_recall": m.vacuous_recall,
    }


def _localize_all(manifest, jobs):
    overrides = pipeline.load_manifest_overrides(manifest)
    results = _align_all(manifest, jobs)
    for res in results:
        pipeline.run_localization_stage(res, overrides)
        if res.metrics.vacuous_recall:
            _warn(f"{res.entry.id}: no annotations; recall is vacuously 1.0")
    return results


def cmd_localize(manifest, out: Path, jobs: int) -> int:
    results = _localize_all(manifest, jobs)
    rows = []
    for res in results:
        base = out / "localize"
        _write_json(base / f"{res.entry.id}.detections.json",
                    [_detection_payload(d) for d in res.detections])
        _write_json(base / f"{res.entry.id}.metrics.json", _metrics_payload(res.metrics))
        m = res.metrics
        rows.append([res.entry.id, m.tp, m.fp, m.fn,
                     _fmt(m.precision), _fmt(m.recall), _fmt(m.f_score)])
    _write_csv(out / "localize" / "metrics.csv",
               ["id", "tp", "fp", "fn", "precision", "recall", "f_score"], rows)
    return 0


def cmd_classify(manifest, out: Path, jobs: int) -> int:
    lex = pipeline.load_manifest_lexicon(manifest)
    results = _localize_all(manifest, jobs)
    for res in results:
        pipeline.run_classification_stage(res, lex, manifest.options)

    count_rows, pct_rows, match_rows = [], [], []
    for res in results:
        _write_json(out / "classify" / f"{res.entry.id}.detections.json",
                    [_detection_payload(d) for d in res.detections])
        cm = _classify.build_confusion(res.annotations, res.detections)
        for row_cls in _classify.THERAPIST_ROWS:
            count_rows.append([res.entry.id, row_cls.value]
                              + [cm.cells[row_cls][c] for c in _classify.ASR_COLUMNS])
            pct_rows.append([res.entry.id, row_cls.value]
                            + [_fmt(cm.row_pcts(row_cls)[c]) for c in _classify.ASR_COLUMNS])
        for ann in res.annotations:
            for det in res.detections:
                if not (det.start_s <= ann.end_s and ann.start_s <= det.end_s):
                    continue
                try:
                    r = _classify.exact_error_match(ann, det, lex,
                                                    manifest.options.sim_threshold)
                    mode, sim, matched = r.mode.value, _fmt(r.similarity), r.matched
                except UnparseableExactError:
                    mode, sim, matched = "Unparseable", "", ""
                match_rows.append([
                    res.entry.id, _fmt(ann.start_s), _fmt(ann.end_s),
                    ann.error_class.value, ann.exact_error,
                    _fmt(det.start_s), _fmt(det.end_s), det.hyp_text,
                    mode, sim, matched,
                ])
    header = ["id", "therapist_class"] + _classify.ASR_COLUMNS
    _write_csv(out / "classify" / "confusion_counts.csv", header, count_rows)
    _write_csv(out / "classify" / "confusion_pcts.csv", header, pct_rows)
    _write_csv(out / "classify" / "exact_matches.csv",
               ["id", "ann_start", "ann_end", "ann_class", "exact_error",
                "det_start", "det_end", "hyp_text", "mode", "similarity", "matched"],
               match_rows)
    return 0


def cmd_evaluate(manifest, out: Path, jobs: int) -> int:
    if len(manifest.speakers) < 2:
        raise InputError("evaluate needs at least 2 manifest entries for correlation")
    results = _align_all(manifest, jobs)
    for res in results:
        if res.therapist_clarity_pct is None:
            raise InputError(f"speaker {res.entry.id}: evaluate requires words_in_error")

    by_group = manifest.options.grouping == "speaker"
    # (source, group) -> list of (asr clarity, therapist pct)
    grouped: dict[tuple[str, str], list] = {}
    for res in results:
        key = (res.source, res.entry.group if by_group else res.entry.id)
        grouped.setdefault(key, []).append(res)

    sources = sorted({src for src, _ in grouped})
    agg_rows, long_rows = [], []
    for src in sources:
        groups = sorted(g for s, g in grouped if s == src)
        asr = [sum(r.clarity.clarity_asr for r in grouped[(src, g)]) / len(grouped[(src, g)])
               for g in groups]
        asr_frac = [sum(r.clarity.clarity_pct / 100 for r in grouped[(src, g)]) / len(grouped[(src, g)])
                    for g in groups]
        ther = [sum(r.therapist_clarity_pct for r in grouped[(src, g)]) / len(grouped[(src, g)])
                for g in groups]
        sev = [float(_SEVERITY_ORDINAL[severity_of(t).value]) for t in ther]

        def corr(a, b, name):
            if len(a) < 2:
                _warn(f"{src}: fewer than 2 groups; {name} left empty")
                return None
            try:
                return pearson(a, b)
            except ZeroVariance:
                _warn(f"{src}: zero variance; {name} left empty")
                return None

        p_sev = corr(asr, sev, "pearson_vs_severity")
        p_ther = corr(asr, ther, "pearson_vs_therapist")
        dist = normalized_euclidean(asr_frac, [t / 100 for t in ther])
        agg_rows.append([src, _fmt(p_sev), _fmt(p_ther), _fmt(dist)])
        for metric, value in [("pearson_vs_severity", p_sev),
                              ("pearson_vs_therapist", p_ther),
                              ("norm_euclidean_vs_therapist", dist)]:
            long_rows.append([src, metric, _fmt(value)])

    _write_csv(out / "evaluate" / "aggregate.csv",
               ["source", "pearson_vs_severity", "pearson_vs_therapist",
                "norm_euclidean_vs_therapist"], agg_rows)
    _write_csv(out / "evaluate" / "long.csv", ["source", "metric", "value"], long_rows)
    return 0


_COMMANDS = {
    "clarity": cmd_clarity,
    "localize": cmd_localize,
    "classify": cmd_classify,
    "evaluate": cmd_evaluate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="speech-clarity",
        description="Clarity scoring, mispronunciation localization and "
                    "classification for read speech.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("clarity", "per-speaker clarity reports (stage 1)"),
        ("localize", "time-stamped detections and overlap metrics (stage 2)"),
        ("classify", "error typing, confusion matrix, exact matches (stage 3)"),
        ("evaluate", "cross-speaker correlation/distance aggregates"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("manifest", help="run manifest JSON")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--lexicon", help="CMUdict-compatible lexicon file")
        p.add_argument("--override-labels", help="CSV raw_label,error_class")
        p.add_argument("--abs-threshold", type=int, default=None)
        p.add_argument("--rel-threshold", type=float, default=None)
        p.add_argument("--sim-threshold", type=float, default=None)
        p.add_argument("--grouping", choices=["speaker", "recording"], default=None)
        p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        manifest = pipeline.load_manifest(args.manifest)
        _apply_cli_options(manifest, args)
        return _COMMANDS[args.command](manifest, Path(args.out), args.jobs)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # internal invariant violation
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
