"""Tokenization, lexicon-based POS tagging, and rule-based lemmatization.

The tagger looks each token up in a word->tag lexicon and falls back to
suffix heuristics for unknown words. The lemmatizer turns verbs into
infinitives and nouns into singulars using exception lexicons first, then
ordered suffix-detachment rules whose outputs are validated against a
dictionary (tag-lexicon keys plus, optionally, frequency-list words).

All lexicons are immutable after load; every operation here is pure.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ResourceError
from .lexicon import FrequencyTable

# Coarse part-of-speech classes derived from Penn-style fine tags.
NOUN = "NOUN"
PROPER_NOUN = "PROPER_NOUN"
VERB = "VERB"
OTHER = "OTHER"
PUNCT = "PUNCT"
NUMBER = "NUMBER"

_PUNCT_CHARS = frozenset(string.punctuation)

# Detachment rules, tried in order: (suffix to remove, string to attach).
NOUN_RULES: tuple[tuple[str, str], ...] = (
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("ies", "y"),
    ("men", "man"),
    ("s", ""),
)
VERB_RULES: tuple[tuple[str, str], ...] = (
    ("ies", "y"),
    ("ing", "e"),
    ("ing", ""),
    ("ed", "e"),
    ("ed", ""),
    ("es", "e"),
    ("es", ""),
    ("s", ""),
)

_VOWELS = frozenset("aeiou")


def coarse_of(fine_tag: str) -> str:
    """Map a fine Penn-style tag onto its coarse class."""
    if fine_tag in ("NN", "NNS"):
        return NOUN
    if fine_tag in ("NNP", "NNPS"):
        return PROPER_NOUN
    if fine_tag.startswith("VB"):
        return VERB
    if fine_tag == "CD":
        return NUMBER
    if fine_tag and not any(ch.isalnum() for ch in fine_tag):
        return PUNCT
    return OTHER


@dataclass(frozen=True)
class Token:
    """A surface word with its position and (once tagged) POS information."""

    surface: str
    key: str
    position: int
    fine_tag: str = ""
    coarse_tag: str = ""


@dataclass
class MorphLexicons:
    """Tag lexicon plus noun/verb exception maps and a validation dictionary.

    ``valid_words`` is the set detachment results are checked against. It
    defaults to the tag-lexicon keys; pass a frequency table to ``load`` to
    widen it with the frequency-list vocabulary.
    """

    tag_lexicon: dict[str, str]
    noun_exceptions: dict[str, str]
    verb_exceptions: dict[str, str]
    valid_words: frozenset[str] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.valid_words is None:
            self.valid_words = frozenset(self.tag_lexicon)

    @classmethod
    def load(
        cls,
        tag_path: str | Path,
        noun_exc_path: str | Path | None = None,
        verb_exc_path: str | Path | None = None,
        frequency: FrequencyTable | None = None,
    ) -> "MorphLexicons":
        tag_lexicon = {w: t for w, t in _read_pairs(tag_path, "word tag")}
        noun_exc = {}
        if noun_exc_path is not None:
            noun_exc = {w: l.lower() for w, l in _read_pairs(noun_exc_path, "inflected lemma")}
        verb_exc = {}
        if verb_exc_path is not None:
            verb_exc = {w: l.lower() for w, l in _read_pairs(verb_exc_path, "inflected lemma")}
        valid = set(tag_lexicon)
        if frequency is not None:
            valid.update(frequency.entries)
        return cls(
            tag_lexicon=tag_lexicon,
            noun_exceptions=noun_exc,
            verb_exceptions=verb_exc,
            valid_words=frozenset(valid),
        )


def _read_pairs(path: str | Path, what: str) -> Iterator[tuple[str, str]]:
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ResourceError(f"{path}: line {lineno}: expected '{what}'")
            key = parts[0].lower()
            if key in seen:
                continue
            seen.add(key)
            yield key, parts[1]


def default_exceptions_path(kind: str) -> str:
    """Path to the bundled irregular-noun or irregular-verb exception file."""
    if kind not in ("noun", "verb"):
        raise ValueError(f"unknown exception kind: {kind!r}")
    from importlib.resources import files

    return str(files("lexsimp").joinpath(f"data/{kind}_exceptions.txt"))


def tokenize(sentence: str) -> list[Token]:
    """Split on whitespace, then peel leading/trailing ASCII punctuation.

    Interior apostrophes, hyphens, and other interior punctuation stay
    inside the token. Positions are consecutive from 0.
    """
    pieces: list[str] = []
    for chunk in sentence.split():
        lead: list[str] = []
        while chunk and chunk[0] in _PUNCT_CHARS:
            lead.append(chunk[0])
            chunk = chunk[1:]
        trail: list[str] = []
        while chunk and chunk[-1] in _PUNCT_CHARS:
            trail.append(chunk[-1])
            chunk = chunk[:-1]
        pieces.extend(lead)
        if chunk:
            pieces.append(chunk)
        pieces.extend(reversed(trail))
    return [Token(surface=p, key=p.lower(), position=i) for i, p in enumerate(pieces)]


def _fallback_tag(token: Token) -> str:
    key = token.key
    if key.endswith("ing"):
        return "VBG"
    if key.endswith("ed"):
        return "VBD"
    if key.endswith("s") and len(key) > 3:
        return "NNS"
    if token.position > 0 and token.surface[:1].isupper():
        return "NNP"
    if key.isdigit():
        return "CD"
    if len(key) == 1 and key in _PUNCT_CHARS:
        return "."
    return "NN"


def tag_tokens(tokens: Iterable[Token], lex: MorphLexicons) -> list[Token]:
    """Assign fine and coarse tags: lexicon lookup, then suffix fallbacks."""
    out = []
    for tok in tokens:
        fine = lex.tag_lexicon.get(tok.key)
        if fine is None:
            fine = _fallback_tag(tok)
        out.append(replace(tok, fine_tag=fine, coarse_tag=coarse_of(fine)))
    return out


def _ends_doubled_consonant(stem: str) -> bool:
    return (
        len(stem) >= 2
        and stem[-1] == stem[-2]
        and stem[-1].isalpha()
        and stem[-1] not in _VOWELS
    )


def lemmatize(token: Token, lex: MorphLexicons) -> str:
    """Return the lemma of a tagged noun or verb token.

    Exception lexicons win outright. Otherwise detachment rules are tried
    in order and the first result found in the validation dictionary wins;
    a stem ending in a doubled consonant is also tried with the doubling
    undone when the rule attaches nothing (run+n+ing). When nothing
    validates, a word that is itself in the dictionary is kept as is, and
    anything else falls back to the bare stem of the first applicable rule.
    """
    if token.coarse_tag == NOUN:
        exceptions, rules = lex.noun_exceptions, NOUN_RULES
    elif token.coarse_tag == VERB:
        exceptions, rules = lex.verb_exceptions, VERB_RULES
    else:
        raise ValueError("lemmatize called on non-noun/verb")
    key = token.key
    hit = exceptions.get(key)
    if hit is not None:
        return hit
    fallback = ""
    for suffix, attach in rules:
        if not key.endswith(suffix):
            continue
        stem = key[: len(key) - len(suffix)]
        if not stem and not attach:
            continue
        if not fallback:
            fallback = stem
        candidates = [stem + attach]
        if not attach and _ends_doubled_consonant(stem):
            candidates.append(stem[:-1])
        for cand in candidates:
            if cand and cand in lex.valid_words:
                return cand
    if key in lex.valid_words:
        return key
    return fallback or key


def _recase(word: str, original_surface: str) -> str:
    if original_surface[:1].isupper() and word:
        return word[0].upper() + word[1:]
    return word


def lemmatize_sentence(tokens: Iterable[Token], lex: MorphLexicons) -> list[Token]:
    """Replace every noun/verb token's surface and key with its lemma.

    Proper nouns, punctuation, numbers, and other classes pass through,
    a leading capital is preserved, and tags are not recomputed.
    """
    out = []
    for tok in tokens:
        if tok.coarse_tag in (NOUN, VERB):
            lemma = lemmatize(tok, lex)
            out.append(replace(tok, surface=_recase(lemma, tok.surface), key=lemma))
        else:
            out.append(tok)
    return out
