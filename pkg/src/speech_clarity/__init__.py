"""Explainable mispronunciation assessment for read speech.

Three stages: clarity scoring from ASR transcripts, temporal localization
of mispronounced regions against therapist annotations, and word/phoneme
error-type classification via edit-distance analysis.
"""
from .align import BACKEND, EditOp, EditScript, ErrorRun, OpKind, align, consecutive_error_runs
from .annotations import ErrorClass, TherapistAnnotation, map_label, parse_label_file
from .clarity import ClarityReport, Severity, asr_clarity, severity_of, therapist_clarity
from .classify import (AsrErrorClass, ConfusionMatrix, ExactMatchResult, MatchMode,
                       build_confusion, classify_detection, classify_word_pair,
                       exact_error_match)
from .lexicon import Lexicon, PhonemeSeq, PhonemeSource, load_lexicon, phonemes_of
from .localize import (DetectedError, LocalizationMetrics, TimedWord,
                       score_localization, timestamp_runs)
from .normalize import Token, normalize_word, tokenize
from .stats import ScoreVector, normalized_euclidean, pearson

__version__ = "0.1.0"
