"""Synonym-oriented embedding table with exact top-k cosine retrieval.

Rows are L2-normalized at load time so cosine similarity is a plain dot
product. Retrieval is an exact scan (no approximate index); ties are broken
lexicographically so results are platform-independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ResourceError
from .lexicon import FrequencyTable, frequency_of
from .morphology import MorphLexicons


@dataclass(frozen=True)
class SynonymCandidate:
    """One retrieved neighbor, optionally enriched with frequency and tag."""

    word: str
    similarity: float
    frequency: int = 0
    fine_tag: str | None = None


@dataclass
class EmbeddingTable:
    words: list[str]
    vocab: dict[str, int]
    vectors: np.ndarray  # (n, d) float64, unit-norm rows
    d: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, Sequence[float]]]) -> "EmbeddingTable":
        """Build a table from (word, vector) pairs; duplicates keep the first."""
        words: list[str] = []
        vocab: dict[str, int] = {}
        rows: list[np.ndarray] = []
        d = None
        for word, values in pairs:
            key = word.lower()
            if key in vocab:
                continue
            vec = np.asarray(values, dtype=np.float64)
            if d is None:
                d = vec.shape[0]
            elif vec.shape[0] != d:
                raise ResourceError(f"dimension mismatch for word '{key}'")
            norm = float(np.linalg.norm(vec))
            if norm == 0.0:
                raise ResourceError(f"zero-norm vector for word '{key}'")
            vocab[key] = len(words)
            words.append(key)
            rows.append(vec / norm)
        if not rows:
            raise ResourceError("no embedding entries")
        return cls(words=words, vocab=vocab, vectors=np.vstack(rows), d=int(d))


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Load a word2vec/GloVe-style text embedding file.

    An optional first line holding exactly two integers (``N d``) is treated
    as a header and skipped. Vectors are normalized on load; zero vectors
    and dimension mismatches are rejected.
    """
    pairs: list[tuple[str, np.ndarray]] = []
    d = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if lineno == 1 and len(parts) == 2 and _both_ints(parts):
                continue
            if len(parts) < 2:
                raise ResourceError(f"line {lineno}: expected 'word v1 ... vd'")
            word = parts[0]
            try:
                vec = np.array([float(v) for v in parts[1:]], dtype=np.float64)
            except ValueError:
                raise ResourceError(f"line {lineno}: invalid vector component") from None
            if d is None:
                d = vec.shape[0]
            elif vec.shape[0] != d:
                raise ResourceError(f"line {lineno}: dimension mismatch")
            if float(np.linalg.norm(vec)) == 0.0:
                raise ResourceError(f"line {lineno}: zero-norm vector for word '{word}'")
            pairs.append((word, vec))
    if not pairs:
        raise ResourceError(f"{path}: no embedding entries")
    return EmbeddingTable.from_pairs(pairs)


def _both_ints(parts: Sequence[str]) -> bool:
    try:
        int(parts[0])
        int(parts[1])
    except ValueError:
        return False
    return True


def top_k_synonyms(
    table: EmbeddingTable,
    word: str,
    k: int,
    freq: FrequencyTable | None = None,
    lex: MorphLexicons | None = None,
) -> list[SynonymCandidate]:
    """Exact top-k nearest neighbors of ``word`` by cosine, self excluded.

    Results are ordered by descending similarity with lexicographic
    tie-breaks. An absent word yields an empty list; fewer than ``k``
    candidates are returned when the vocabulary is small. Scan results are
    memoized per (word, k), which leaves the function pure.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    key = word.lower()
    idx = table.vocab.get(key)
    if idx is None:
        return []
    cached = table._cache.get((key, k))
    if cached is None:
        cached = _scan_top_k(table, idx, k)
        table._cache[(key, k)] = cached
    return [
        SynonymCandidate(
            word=w,
            similarity=s,
            frequency=frequency_of(freq, w) if freq is not None else 0,
            fine_tag=lex.tag_lexicon.get(w) if lex is not None else None,
        )
        for w, s in cached
    ]


def _scan_top_k(table: EmbeddingTable, idx: int, k: int) -> tuple[tuple[str, float], ...]:
    sims = table.vectors @ table.vectors[idx]
    n = sims.shape[0]
    m = min(k + 1, n)  # +1 covers the query row itself
    part = np.argpartition(-sims, m - 1)[:m]
    # Pull in every index tied with the partition boundary so lexicographic
    # tie-breaking sees the full tie group.
    threshold = sims[part].min()
    pool = np.flatnonzero(sims >= threshold).tolist()
    pool.sort(key=lambda i: (-sims[i], table.words[i]))
    picked = [i for i in pool if i != idx][:k]
    return tuple((table.words[i], float(sims[i])) for i in picked)
