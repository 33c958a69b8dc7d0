"""The simplification pipeline: lemma transform plus rare-word replacement.

A sentence is tokenized and tagged once; the lemma step rewrites nouns and
verbs to their base forms, and the replacement step substitutes each rare
token with its most frequent POS-compatible synonym. Ablation modes run
either step alone. Everything is deterministic for fixed inputs and
resources.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace as _dc_replace

from .embeddings import EmbeddingTable, SynonymCandidate, top_k_synonyms
from .lexicon import FrequencyTable, frequency_of, is_rare
from .morphology import (
    NUMBER,
    PROPER_NOUN,
    PUNCT,
    MorphLexicons,
    Token,
    _recase,
    coarse_of,
    lemmatize_sentence,
    tag_tokens,
    tokenize,
)

MODES = ("lrls", "lemma", "rr", "none")

# Coarse classes never considered for replacement.
EXEMPT_COARSE = frozenset({PUNCT, NUMBER, PROPER_NOUN})


@dataclass(frozen=True)
class SimplifyConfig:
    """Hyperparameters and guard policies for one pipeline run.

    ``n_f`` is the rarity threshold (raw count), ``n_s`` the number of
    synonym candidates retrieved per rare word. ``require_gain`` demands the
    replacement be strictly more frequent than the original; switching it
    off runs the unguarded highest-frequency-candidate rule.
    """

    n_f: int = 1000
    n_s: int = 10
    mode: str = "lrls"
    require_gain: bool = True
    preserve_case: bool = True

    def __post_init__(self) -> None:
        if self.n_f < 0:
            raise ValueError("n_f must be >= 0")
        if self.n_s < 1:
            raise ValueError("n_s must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode: {self.mode!r}")


@dataclass(frozen=True)
class Replacement:
    """Audit record of one applied substitution (lowercase lookup forms)."""

    position: int
    original: str
    replacement: str
    original_freq: int
    replacement_freq: int
    similarity: float


@dataclass(frozen=True)
class SimplifyResult:
    tokens: tuple[Token, ...]
    text: str
    replacements: tuple[Replacement, ...]
    lemma_changes: int


def passes_screen(token: Token, cfg: SimplifyConfig, freq: FrequencyTable, emb: EmbeddingTable) -> bool:
    """Cheap eligibility test run before any embedding lookup."""
    if token.coarse_tag in EXEMPT_COARSE:
        return False
    if not is_rare(freq, token.key, cfg.n_f):
        return False
    return token.key in emb.vocab


def compatible_candidates(
    token: Token, candidates: list[SynonymCandidate], lex: MorphLexicons
) -> list[SynonymCandidate]:
    """Drop candidates without a tag, with a different coarse tag, or equal to the token."""
    out = []
    for cand in candidates:
        if cand.word == token.key:
            continue
        tag = cand.fine_tag if cand.fine_tag is not None else lex.tag_lexicon.get(cand.word)
        if tag is None or coarse_of(tag) != token.coarse_tag:
            continue
        out.append(cand)
    return out


def select_replacement(
    token: Token,
    candidates: list[SynonymCandidate],
    cfg: SimplifyConfig,
    freq: FrequencyTable,
    lex: MorphLexicons,
) -> Replacement | None:
    """Pick the winning candidate: max frequency, then similarity, then word order."""
    survivors = compatible_candidates(token, candidates, lex)
    if not survivors:
        return None
    winner = min(survivors, key=lambda c: (-c.frequency, -c.similarity, c.word))
    original_freq = frequency_of(freq, token.key)
    if cfg.require_gain and winner.frequency <= original_freq:
        return None
    return Replacement(
        position=token.position,
        original=token.key,
        replacement=winner.word,
        original_freq=original_freq,
        replacement_freq=winner.frequency,
        similarity=winner.similarity,
    )


def candidate_replacement(
    token: Token,
    cfg: SimplifyConfig,
    freq: FrequencyTable,
    emb: EmbeddingTable,
    lex: MorphLexicons,
) -> Replacement | None:
    """Replacement decision for one tagged token, or None when it stays."""
    if not passes_screen(token, cfg, freq, emb):
        return None
    candidates = top_k_synonyms(emb, token.key, cfg.n_s, freq=freq, lex=lex)
    return select_replacement(token, candidates, cfg, freq, lex)


def apply_replacement(token: Token, rep: Replacement, cfg: SimplifyConfig) -> Token:
    surface = _recase(rep.replacement, token.surface) if cfg.preserve_case else rep.replacement
    return _dc_replace(token, surface=surface, key=rep.replacement)


def replace_rare_words(
    tokens: list[Token],
    cfg: SimplifyConfig,
    freq: FrequencyTable,
    emb: EmbeddingTable,
    lex: MorphLexicons,
) -> tuple[list[Token], list[Replacement]]:
    """The replacement pass over an already-tagged token sequence.

    Tokens are decided independently, left to right; a substituted word is
    not re-examined.
    """
    out: list[Token] = []
    replacements: list[Replacement] = []
    for tok in tokens:
        rep = candidate_replacement(tok, cfg, freq, emb, lex)
        if rep is None:
            out.append(tok)
        else:
            out.append(apply_replacement(tok, rep, cfg))
            replacements.append(rep)
    return out, replacements


def simplify_sentence(
    sentence: str,
    cfg: SimplifyConfig,
    freq: FrequencyTable,
    emb: EmbeddingTable,
    lex: MorphLexicons,
) -> SimplifyResult:
    """Run the configured pipeline over one sentence.

    ``lrls`` lemmatizes then replaces, ``lemma`` and ``rr`` run a single
    step, ``none`` is the identity. The output text is the single-space
    join of the final token surfaces.
    """
    tokens = tag_tokens(tokenize(sentence), lex)
    lemma_changes = 0
    if cfg.mode in ("lrls", "lemma"):
        lemmatized = lemmatize_sentence(tokens, lex)
        lemma_changes = sum(1 for a, b in zip(tokens, lemmatized) if a.key != b.key)
        tokens = lemmatized
    replacements: list[Replacement] = []
    if cfg.mode in ("lrls", "rr"):
        tokens, replacements = replace_rare_words(tokens, cfg, freq, emb, lex)
    return SimplifyResult(
        tokens=tuple(tokens),
        text=" ".join(t.surface for t in tokens),
        replacements=tuple(replacements),
        lemma_changes=lemma_changes,
    )


def freq_gain(rep: Replacement) -> float:
    """log10 frequency gain of one replacement."""
    return math.log10(max(rep.replacement_freq, 1) / max(rep.original_freq, 1))
