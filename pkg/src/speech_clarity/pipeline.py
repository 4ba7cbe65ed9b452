"""Per-speaker orchestration shared by the CLI subcommands."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import classify as _classify
from .align import EditScript, align, consecutive_error_runs
from .annotations import (TherapistAnnotation, load_overrides, map_annotations,
                          parse_label_file)
from .clarity import ClarityReport, asr_clarity, severity_of, therapist_clarity
from .errors import InputError
from .lexicon import Lexicon, load_lexicon
from .localize import (DetectedError, LocalizationMetrics, TimedWord,
                       score_localization, timestamp_runs)
from .normalize import normalize_word, tokenize


@dataclass(frozen=True)
class SpeakerEntry:
    id: str
    transcript_path: str
    reference_path: str
    annotation_path: Optional[str] = None
    words_in_error: Optional[int] = None
    speaker: Optional[str] = None  # grouping key; defaults to id

    @property
    def group(self) -> str:
        return self.speaker or self.id


@dataclass
class Options:
    abs_threshold: int = _classify.ABS_THRESHOLD_DEFAULT
    rel_threshold: float = _classify.REL_THRESHOLD_DEFAULT
    sim_threshold: float = _classify.SIM_THRESHOLD_DEFAULT
    grouping: str = "recording"  # or "speaker"


@dataclass
class RunManifest:
    speakers: list[SpeakerEntry]
    lexicon_path: Optional[str]
    options: Options
    override_path: Optional[str] = None


def load_manifest(path) -> RunManifest:
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}") from None
    base = Path(path).parent

    def resolve(p):
        return str(base / p) if p and not Path(p).is_absolute() else p

    speakers = []
    for s in data.get("speakers", []):
        speakers.append(SpeakerEntry(
            id=s["id"],
            transcript_path=resolve(s["transcript_path"]),
            reference_path=resolve(s["reference_path"]),
            annotation_path=resolve(s.get("annotation_path")),
            words_in_error=s.get("words_in_error"),
            speaker=s.get("speaker"),
        ))
    opts = Options(**data.get("options", {}))
    if opts.grouping not in ("speaker", "recording"):
        raise InputError(f"unknown grouping {opts.grouping!r}")
    if opts.abs_threshold <= 0 or opts.rel_threshold <= 0 or opts.sim_threshold < 0:
        raise InputError("thresholds must be positive")
    return RunManifest(
        speakers=speakers,
        lexicon_path=resolve(data.get("lexicon_path")),
        options=opts,
        override_path=resolve(data.get("override_path")),
    )


def load_transcript(path) -> tuple[str, str, list[TimedWord]]:
    """Read a transcript JSON file; returns (audio_id, source, timed words)."""
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}") from None
    try:
        words = [TimedWord(word=w["word"], start_s=float(w["start"]), end_s=float(w["end"]))
                 for w in data["words"]]
        audio_id = data["audio_id"]
        source = data["source"]
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: malformed transcript JSON ({e})") from None
    for w in words:
        if w.end_s < w.start_s:
            raise InputError(f"{path}: word {w.word!r} has end before start")
    return audio_id, source, words


def load_reference(path) -> list[str]:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"{path}: {e}") from None
    return [t.norm for t in tokenize(text)]


def normalized_hypothesis(words: list[TimedWord]) -> list[TimedWord]:
    """Normalize raw ASR words; a raw word splitting into several tokens
    yields several entries sharing its time span, empty ones are dropped."""
    out = []
    for w in words:
        for tok in tokenize(w.word):
            out.append(TimedWord(word=tok.norm, start_s=w.start_s, end_s=w.end_s))
    return out


@dataclass
class SpeakerResult:
    entry: SpeakerEntry
    source: str
    ref_norms: list[str]
    hyp_words: list[TimedWord]
    script: EditScript
    clarity: ClarityReport
    therapist_clarity_pct: Optional[float]
    detections: list[DetectedError] = field(default_factory=list)
    annotations: list[TherapistAnnotation] = field(default_factory=list)
    metrics: Optional[LocalizationMetrics] = None


def run_alignment_stage(entry: SpeakerEntry) -> SpeakerResult:
    ref_norms = load_reference(entry.reference_path)
    _, source, raw_words = load_transcript(entry.transcript_path)
    hyp_words = normalized_hypothesis(raw_words)
    script = align(ref_norms, [w.word for w in hyp_words])
    clarity = asr_clarity(script, len(ref_norms))
    tclar = None
    if entry.words_in_error is not None:
        tclar = therapist_clarity(entry.words_in_error, len(ref_norms))
    return SpeakerResult(
        entry=entry,
        source=source,
        ref_norms=ref_norms,
        hyp_words=hyp_words,
        script=script,
        clarity=clarity,
        therapist_clarity_pct=tclar,
    )


def run_localization_stage(result: SpeakerResult, overrides=None) -> SpeakerResult:
    if not result.entry.annotation_path:
        raise InputError(f"speaker {result.entry.id}: no annotation_path in manifest")
    annotations = map_annotations(parse_label_file(result.entry.annotation_path), overrides)
    runs = consecutive_error_runs(result.script)
    detections = timestamp_runs(runs, result.hyp_words, result.ref_norms)
    result.annotations = annotations
    result.detections = detections
    result.metrics = score_localization(detections, annotations)
    return result


def run_classification_stage(result: SpeakerResult, lex: Lexicon, opts: Options) -> SpeakerResult:
    for det in result.detections:
        det.asr_class = _classify.classify_detection(
            det, lex, opts.abs_threshold, opts.rel_threshold)
    return result


def load_manifest_lexicon(manifest: RunManifest) -> Lexicon:
    if not manifest.lexicon_path:
        raise InputError("no lexicon path given (manifest lexicon_path or --lexicon)")
    return load_lexicon(manifest.lexicon_path)


def load_manifest_overrides(manifest: RunManifest):
    if manifest.override_path:
        return load_overrides(manifest.override_path)
    return {}
