"""Word-frequency lexicon and rarity queries.

The frequency file holds one ``word count`` pair per line, separated by a
single ASCII space; lines beginning with ``#`` are ignored. Thresholding is
against raw occurrence counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ResourceError


@dataclass
class FrequencyTable:
    """Lowercase word -> occurrence count. Absent words count as 0."""

    entries: dict[str, int]

    @property
    def size(self) -> int:
        return len(self.entries)


def load_frequency_table(path: str | Path) -> FrequencyTable:
    """Load a frequency list; duplicate words keep the larger count."""
    entries: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            word, _, count_field = line.partition(" ")
            try:
                count = int(count_field)
            except ValueError:
                count = -1
            if not count_field or count < 0:
                raise ResourceError(f"line {lineno}: invalid count")
            key = word.lower()
            prev = entries.get(key)
            if prev is None or count > prev:
                entries[key] = count
    if not entries:
        raise ResourceError(f"{path}: no frequency entries")
    return FrequencyTable(entries=entries)


def frequency_of(table: FrequencyTable, word: str) -> int:
    """Case-insensitive count lookup; absent words yield 0."""
    return table.entries.get(word.lower(), 0)


def is_rare(table: FrequencyTable, word: str, n_f: int) -> bool:
    """True when the word's count falls below ``n_f``.

    Tokens made solely of punctuation or digits are never rare, so they
    never become replacement targets.
    """
    if not any(ch.isalpha() for ch in word):
        return False
    return frequency_of(table, word) < n_f
