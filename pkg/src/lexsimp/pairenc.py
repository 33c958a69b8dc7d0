"""Pair-record construction and dataset emission.

Records pair an original sentence with its simplified version at the word
level: a ``[SEP]`` token separates the two, and per-token segment ids (0
for the first sentence and the separator, 1 for the second) carry the
sentence membership. Subword tokenization and any classifier prefix token
are the downstream model's concern.

Emission modes: ``baseline`` writes the originals, ``only`` the simplified
texts, ``aug`` originals followed by simplified copies (2N records), and
``aux`` full pair records.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .corpus import Dataset, LabeledExample
from .embeddings import EmbeddingTable
from .errors import DatasetError
from .lexicon import FrequencyTable
from .morphology import MorphLexicons, tokenize
from .simplify import Replacement, SimplifyConfig, SimplifyResult, simplify_sentence

SEPARATOR = "[SEP]"
EMIT_MODES = ("baseline", "only", "aug", "aux")

_JSON_FIELDS = ("id", "label", "variant", "text_a", "text_b", "tokens", "segments", "replacements")


@dataclass(frozen=True)
class PairRecord:
    id: int
    label: str
    variant: str
    text_a: str
    text_b: str
    tokens: tuple[str, ...]
    segments: tuple[int, ...]
    replacements: tuple[Replacement, ...]


@dataclass(frozen=True)
class EmissionReport:
    records: int
    sentences: int
    replaced_fraction: float
    lemma_fraction: float


def _surface_tokens(text: str) -> list[str]:
    return [t.surface for t in tokenize(text)]


def _single_record(
    example: LabeledExample, variant: str, text: str, replacements: tuple[Replacement, ...] = ()
) -> PairRecord:
    tokens = tuple(_surface_tokens(text))
    return PairRecord(
        id=example.id,
        label=example.label,
        variant=variant,
        text_a=text,
        text_b="",
        tokens=tokens,
        segments=tuple(0 for _ in tokens),
        replacements=replacements,
    )


def make_record(example: LabeledExample, simplified: SimplifyResult) -> PairRecord:
    """Build the auxiliary-input record for one (original, simplified) pair."""
    if not simplified.text.strip():
        raise ValueError("simplified sentence empty")
    tokens_a = _surface_tokens(example.text)
    tokens_b = [t.surface for t in simplified.tokens]
    tokens = tuple(tokens_a + [SEPARATOR] + tokens_b)
    segments = tuple([0] * (len(tokens_a) + 1) + [1] * len(tokens_b))
    return PairRecord(
        id=example.id,
        label=example.label,
        variant="aux",
        text_a=example.text,
        text_b=simplified.text,
        tokens=tokens,
        segments=segments,
        replacements=simplified.replacements,
    )


def record_to_json(record: PairRecord) -> str:
    obj = {
        "id": record.id,
        "label": record.label,
        "variant": record.variant,
        "text_a": record.text_a,
        "text_b": record.text_b,
        "tokens": list(record.tokens),
        "segments": list(record.segments),
        "replacements": [asdict(r) for r in record.replacements],
    }
    return json.dumps(obj, ensure_ascii=False)


def read_records(path: str | Path) -> list[PairRecord]:
    """Parse an emitted record file back into memory."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                raise DatasetError(f"line {lineno}: invalid JSON") from None
            records.append(
                PairRecord(
                    id=int(obj["id"]),
                    label=obj["label"],
                    variant=obj["variant"],
                    text_a=obj["text_a"],
                    text_b=obj["text_b"],
                    tokens=tuple(obj["tokens"]),
                    segments=tuple(int(s) for s in obj["segments"]),
                    replacements=tuple(Replacement(**r) for r in obj["replacements"]),
                )
            )
    return records


def _load_paraphrase_lines(path: str | Path, expected: int) -> list[str]:
    lines = [ln.strip() for ln in Path(path).read_text(encoding="utf-8").splitlines()]
    if len(lines) != expected:
        raise DatasetError(
            f"paraphrase file has {len(lines)} lines, dataset has {expected} examples"
        )
    return lines


def _external_result(text: str) -> SimplifyResult:
    tokens = tuple(tokenize(text))
    return SimplifyResult(
        tokens=tokens,
        text=" ".join(t.surface for t in tokens),
        replacements=(),
        lemma_changes=0,
    )


def build_records(
    data: Dataset,
    cfg: SimplifyConfig,
    mode: str,
    freq: FrequencyTable,
    emb: EmbeddingTable,
    lex: MorphLexicons,
    paraphrase_file: str | Path | None = None,
    threads: int = 1,
) -> tuple[list[PairRecord], EmissionReport]:
    """Produce the record sequence for ``mode`` plus corpus statistics."""
    if mode not in EMIT_MODES:
        raise ValueError(f"unknown emit mode: {mode!r}")
    if len(data) == 0:
        raise DatasetError("empty dataset")

    needs_simplified = mode != "baseline"
    results: list[SimplifyResult] = []
    if needs_simplified:
        if paraphrase_file is not None:
            lines = _load_paraphrase_lines(paraphrase_file, len(data))
            results = [_external_result(line) for line in lines]
        else:
            texts = data.texts()
            work = lambda s: simplify_sentence(s, cfg, freq, emb, lex)
            if threads > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(work, texts, chunksize=32))
            else:
                results = [work(s) for s in texts]

    records: list[PairRecord] = []
    if mode == "baseline":
        records = [_single_record(ex, "orig", ex.text) for ex in data]
    elif mode == "only":
        records = [
            _single_record(ex, "simp", res.text, res.replacements)
            for ex, res in zip(data, results)
        ]
    elif mode == "aug":
        records = [_single_record(ex, "orig", ex.text) for ex in data]
        records += [
            _single_record(ex, "simp", res.text, res.replacements)
            for ex, res in zip(data, results)
        ]
    else:
        records = [make_record(ex, res) for ex, res in zip(data, results)]

    total_tokens = 0
    alpha_tokens = 0
    replaced = 0
    lemma_changed = 0
    for ex, res in zip(data, results) if needs_simplified else ():
        originals = tokenize(ex.text)
        total_tokens += len(originals)
        alpha_tokens += sum(1 for t in originals if t.key.isalpha())
        replaced += len(res.replacements)
        lemma_changed += res.lemma_changes
    report = EmissionReport(
        records=len(records),
        sentences=len(data),
        replaced_fraction=replaced / alpha_tokens if alpha_tokens else 0.0,
        lemma_fraction=lemma_changed / total_tokens if total_tokens else 0.0,
    )
    return records, report


def emit_dataset(
    data: Dataset,
    cfg: SimplifyConfig,
    mode: str,
    out: str | Path,
    freq: FrequencyTable,
    emb: EmbeddingTable,
    lex: MorphLexicons,
    paraphrase_file: str | Path | None = None,
    threads: int = 1,
) -> EmissionReport:
    """Write line-delimited records for ``mode`` to ``out`` in input order."""
    records, report = build_records(
        data, cfg, mode, freq, emb, lex, paraphrase_file=paraphrase_file, threads=threads
    )
    with open(out, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(record_to_json(record))
            fh.write("\n")
    return report
