"""CMU-dictionary-style pronunciation lexicon with a letter-spelling fallback."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import MalformedLexiconLine

_STRESS = re.compile(r"^([A-Z]+)[0-2]$")
_VARIANT = re.compile(r"^(.*)\(\d+\)$")


class PhonemeSource(enum.Enum):
    LEXICON = "lexicon"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class PhonemeSeq:
    phones: tuple[str, ...]
    source: PhonemeSource


def _strip_stress(phone: str) -> str:
    m = _STRESS.match(phone)
    return m.group(1) if m else phone


class Lexicon:
    """Case-insensitive word -> pronunciation variants, stress digits stripped.

    Immutable after load; concurrent reads are safe.
    """

    def __init__(self, entries: dict[str, list[tuple[str, ...]]]):
        self._entries = entries
        self.inventory = {p for variants in entries.values() for v in variants for p in v}

    def variants(self, word: str) -> list[tuple[str, ...]]:
        return self._entries.get(word.lower(), [])

    def __len__(self) -> int:
        return len(self._entries)


def load_lexicon(path) -> Lexicon:
    """Parse a CMUdict-compatible file: ``WORD  PH1 PH2 ...``.

    Variant lines ``WORD(2)`` append to the word's variant list; comment
    lines starting ';;;' and blank lines are ignored.
    """
    entries: dict[str, list[tuple[str, ...]]] = {}
    with open(path, encoding="utf-8", errors="replace") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise MalformedLexiconLine(line_no, line)
            word = parts[0]
            m = _VARIANT.match(word)
            if m:
                word = m.group(1)
            phones = tuple(_strip_stress(p.upper()) for p in parts[1:])
            entries.setdefault(word.lower(), []).append(phones)
    return Lexicon(entries)


def phonemes_of(word: str, lex: Lexicon) -> PhonemeSeq:
    """First lexicon variant when present, else one pseudo-phoneme per
    letter (uppercased). Total over non-empty normalized words."""
    if not word:
        raise ValueError("phonemes_of requires a non-empty word")
    variants = lex.variants(word)
    if variants:
        return PhonemeSeq(phones=variants[0], source=PhonemeSource.LEXICON)
    letters = tuple(c.upper() for c in word if c.isalnum())
    if not letters:
        letters = (word.upper(),)
    return PhonemeSeq(phones=letters, source=PhonemeSource.FALLBACK)
