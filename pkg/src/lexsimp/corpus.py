"""Dataset ingestion for labeled and unlabeled sentence corpora.

Three line-oriented formats are supported: ``tsv`` (``label<TAB>text``),
``jsonl`` (one object per line with a ``text`` member and an optional
``label``), and ``plain`` (one unlabeled sentence per line).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import DatasetError

logger = logging.getLogger(__name__)

FORMATS = ("tsv", "jsonl", "plain")


@dataclass(frozen=True)
class LabeledExample:
    """One sentence with an opaque label ("" when unlabeled) and its file ordinal."""

    text: str
    label: str
    id: int


@dataclass(frozen=True)
class Dataset:
    examples: tuple[LabeledExample, ...]
    source: str
    labeled: bool

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[LabeledExample]:
        return iter(self.examples)

    def texts(self) -> list[str]:
        return [ex.text for ex in self.examples]


def load_dataset(path: str | Path, format: str = "tsv") -> Dataset:
    """Load a dataset file into memory.

    Labels are kept as opaque strings. Lines that are empty after trimming
    are skipped with a counted warning; ids are assigned 0..N-1 over the
    kept lines in file order.
    """
    if format not in FORMATS:
        raise DatasetError(f"unknown dataset format: {format!r}")
    raw = Path(path).read_text(encoding="utf-8")
    examples: list[LabeledExample] = []
    skipped = 0
    any_label = False
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            skipped += 1
            continue
        if format == "tsv":
            if "\t" not in line:
                raise DatasetError(f"line {lineno}: missing TAB separator")
            label, text = line.split("\t", 1)
            label = label.strip()
        elif format == "jsonl":
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                raise DatasetError(f"line {lineno}: invalid JSON") from None
            if not isinstance(obj, dict) or "text" not in obj:
                raise DatasetError(f"line {lineno}: missing 'text' member")
            text = str(obj["text"])
            label = str(obj["label"]) if "label" in obj and obj["label"] is not None else ""
        else:
            text, label = line, ""
        text = text.strip()
        if not text:
            skipped += 1
            continue
        if label:
            any_label = True
        examples.append(LabeledExample(text=text, label=label, id=len(examples)))
    if skipped:
        logger.warning("%s: skipped %d blank line(s)", path, skipped)
    if not examples:
        raise DatasetError(f"{path}: no examples")
    labeled = format == "tsv" or (format == "jsonl" and any_label)
    return Dataset(examples=tuple(examples), source=str(path), labeled=labeled)


def write_dataset(dataset: Dataset, path: str | Path, format: str = "tsv") -> None:
    """Write a dataset back out in one of the three supported formats."""
    if format not in FORMATS:
        raise DatasetError(f"unknown dataset format: {format!r}")
    lines = []
    for ex in dataset:
        if format == "tsv":
            lines.append(f"{ex.label}\t{ex.text}")
        elif format == "jsonl":
            obj = {"text": ex.text}
            if dataset.labeled:
                obj["label"] = ex.label
            lines.append(json.dumps(obj, ensure_ascii=False))
        else:
            lines.append(ex.text)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
