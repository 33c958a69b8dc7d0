"""Seeded comparison paraphrasers: random synonym replacement and cutoff.

Both are deterministic functions of (sentence, config, seed). The RNG is
Python's Mersenne Twister (``random.Random``), whose ``random``/``sample``/
``choice`` sequences are stable across platforms and versions, so golden
outputs are portable. Batch drivers derive a per-sentence seed as
``seed XOR example id`` to keep outputs independent of scheduling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace as _dc_replace

from .embeddings import EmbeddingTable, top_k_synonyms
from .lexicon import FrequencyTable
from .morphology import PROPER_NOUN, MorphLexicons, _recase, tag_tokens, tokenize
from .simplify import compatible_candidates

METHODS = ("random_replace", "cutoff")


@dataclass(frozen=True)
class ParaphraseConfig:
    method: str = "random_replace"
    k: int = 1
    p: float = 0.1
    seed: int = 0
    n_s: int = 10

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method: {self.method!r}")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must be in [0, 1]")
        if self.n_s < 1:
            raise ValueError("n_s must be >= 1")


def derive_seed(seed: int, example_id: int) -> int:
    """Schedule-independent per-sentence seed for batch runs."""
    return seed ^ example_id


def random_replace(
    sentence: str,
    cfg: ParaphraseConfig,
    freq: FrequencyTable | None,
    emb: EmbeddingTable,
    lex: MorphLexicons,
) -> str:
    """Replace up to ``k`` random eligible words with random synonyms.

    Eligible positions are alphabetic, non-proper-noun tokens present in
    the embedding vocabulary. Each chosen token is swapped for a uniform
    random pick among its POS-compatible top-``n_s`` candidates; positions
    with no surviving candidate are skipped.
    """
    rng = random.Random(cfg.seed)
    tokens = tag_tokens(tokenize(sentence), lex)
    eligible = [
        t.position
        for t in tokens
        if t.key.isalpha() and t.coarse_tag != PROPER_NOUN and t.key in emb.vocab
    ]
    chosen = sorted(rng.sample(eligible, min(cfg.k, len(eligible))))
    out = list(tokens)
    for pos in chosen:
        tok = out[pos]
        candidates = top_k_synonyms(emb, tok.key, cfg.n_s, freq=freq, lex=lex)
        survivors = compatible_candidates(tok, candidates, lex)
        if not survivors:
            continue
        pick = rng.choice(survivors)
        out[pos] = _dc_replace(tok, surface=_recase(pick.word, tok.surface), key=pick.word)
    return " ".join(t.surface for t in out)


def cutoff(sentence: str, cfg: ParaphraseConfig) -> str:
    """Delete each token independently with probability ``p``.

    If every token would be deleted, the first one is retained so the
    output is never empty.
    """
    rng = random.Random(cfg.seed)
    surfaces = [t.surface for t in tokenize(sentence)]
    kept = [s for s in surfaces if rng.random() >= cfg.p]
    if not kept and surfaces:
        kept = [surfaces[0]]
    return " ".join(kept)


def paraphrase_sentence(
    sentence: str,
    cfg: ParaphraseConfig,
    freq: FrequencyTable | None = None,
    emb: EmbeddingTable | None = None,
    lex: MorphLexicons | None = None,
) -> str:
    """Dispatch on ``cfg.method``."""
    if cfg.method == "cutoff":
        return cutoff(sentence, cfg)
    if emb is None or lex is None:
        raise ValueError("random_replace requires embeddings and a tag lexicon")
    return random_replace(sentence, cfg, freq, emb, lex)
