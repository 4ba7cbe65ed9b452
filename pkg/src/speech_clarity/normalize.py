"""Text normalization: raw passage text and ASR word strings to canonical tokens."""
from __future__ import annotations

import re
from dataclasses import dataclass

# Fold common unicode quotes/dashes to ASCII before stripping, since label
# files and passage texts may mix encodings.
_UNICODE_FOLD = str.maketrans({
    "‘": "'", "’": "'", "‚": "'", "ʼ": "'",
    "“": '"', "”": '"',
    "‐": "-", "‑": "-", "‒": "-", "–": "-",
    "—": "-", "―": "-", "−": "-",
})

_DISALLOWED = re.compile(r"[^a-z0-9'\-]+")
_EDGE_TRIM = re.compile(r"^['\-]+|['\-]+$")


@dataclass(frozen=True)
class Token:
    surface: str
    norm: str
    index: int


def normalize_word(surface: str) -> str:
    """Lowercase, fold unicode punctuation, drop everything but letters,
    digits and internal apostrophes/hyphens. May return ''."""
    s = surface.translate(_UNICODE_FOLD).lower()
    s = _DISALLOWED.sub("", s)
    return _EDGE_TRIM.sub("", s)


def tokenize(text: str) -> list[Token]:
    """Split on whitespace and normalize each piece; pieces that normalize
    to empty are dropped before indexing."""
    tokens = []
    for surface in text.split():
        norm = normalize_word(surface)
        if norm:
            tokens.append(Token(surface=surface, norm=norm, index=len(tokens)))
    return tokens
