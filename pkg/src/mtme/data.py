"""Corpus ingestion, tokenization, vocabulary, batch encoding, embedding
files, dataset statistics, and seeded synthetic corpora for tests.

CSV input follows RFC 4180 (stdlib csv).  Label cells must be literal 0/1.
Tokenization lowercases and splits on any run of non-alphanumeric
codepoints, which is language-agnostic and reproducible.
"""

import csv
import re
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _script_ranges
from .rng import Rng

PAD_INDEX = 0
OOV_INDEX = 1

# Jigsaw toxic-comment CSV columns, shipped as a preset schema.
JIGSAW_SCHEMA = {
    "text_column": "comment_text",
    "label_columns": ["toxic", "severe_toxic", "obscene", "threat", "insult", "identity_hate"],
    "id_column": "id",
}
SCHEMA_PRESETS = {"jigsaw": JIGSAW_SCHEMA}


class DataError(ValueError):
    """Malformed input data (CSV schema, label values, embedding files)."""


@dataclass
class Record:
    id: str
    text: str
    labels: np.ndarray  # uint8 vector aligned with Corpus.label_names


@dataclass
class Corpus:
    records: list
    label_names: list

    def __len__(self) -> int:
        return len(self.records)

    def label_matrix(self) -> np.ndarray:
        if not self.records:
            return np.zeros((0, len(self.label_names)), dtype=np.uint8)
        return np.stack([r.labels for r in self.records])


def resolve_schema(schema) -> dict:
    if isinstance(schema, str):
        try:
            return SCHEMA_PRESETS[schema]
        except KeyError:
            raise DataError(
                f"unknown schema preset {schema!r}; available: {sorted(SCHEMA_PRESETS)}"
            ) from None
    required = {"text_column", "label_columns"}
    missing = required - set(schema)
    if missing:
        raise DataError(f"schema missing keys: {sorted(missing)}")
    unknown = set(schema) - required - {"id_column"}
    if unknown:
        raise DataError(f"schema has unknown keys: {sorted(unknown)}")
    return schema


def load_csv(path, schema) -> Corpus:
    """One record per row; label cells parsed strictly as 0/1."""
    schema = resolve_schema(schema)
    path = Path(path)
    if not path.exists():
        raise DataError(f"data file not found: {path}")
    text_col = schema["text_column"]
    label_cols = list(schema["label_columns"])
    id_col = schema.get("id_column")
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        needed = [text_col] + label_cols + ([id_col] if id_col else [])
        for col in needed:
            if col not in header:
                raise DataError(f"{path}: missing column {col!r} (header: {header})")
        for row_no, row in enumerate(reader, start=2):  # 1-based; header is line 1
            labels = np.zeros(len(label_cols), dtype=np.uint8)
            for i, col in enumerate(label_cols):
                cell = (row[col] or "").strip()
                if cell == "0":
                    labels[i] = 0
                elif cell == "1":
                    labels[i] = 1
                else:
                    raise DataError(
                        f"{path} row {row_no}: label {col!r} must be 0 or 1, got {cell!r}"
                    )
            rid = row[id_col] if id_col else str(row_no - 2)
            text = row[text_col]
            if text is None:
                raise DataError(f"{path} row {row_no}: missing text cell")
            records.append(Record(id=rid, text=text, labels=labels))
    return Corpus(records=records, label_names=label_cols)


_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> list:
    """Lowercase, then split on any non-alphanumeric run (underscore included)."""
    return _TOKEN_RE.findall(text.lower())


@dataclass
class Vocabulary:
    token_to_index: dict
    index_to_token: list

    @classmethod
    def from_tokens(cls, ordered_tokens) -> "Vocabulary":
        index_to_token = ["<pad>", "<oov>"] + list(ordered_tokens)
        token_to_index = {t: i for i, t in enumerate(index_to_token) if i >= 2}
        return cls(token_to_index, index_to_token)

    def __len__(self) -> int:
        return len(self.index_to_token)

    @property
    def real_tokens(self) -> list:
        return self.index_to_token[2:]

    def index(self, token: str) -> int:
        return self.token_to_index.get(token, OOV_INDEX)


def build_vocab(corpus: Corpus, min_freq: int = 2, max_size: int = 100_000) -> Vocabulary:
    """Frequency-ranked tokens (ties by first occurrence); indices 0/1 reserved.

    ``max_size`` caps the number of real tokens (reserved rows excluded).
    """
    counts = Counter()
    first_seen = {}
    position = 0
    for record in corpus.records:
        for token in tokenize(record.text):
            counts[token] += 1
            if token not in first_seen:
                first_seen[token] = position
                position += 1
    kept = [t for t, c in counts.items() if c >= min_freq]
    kept.sort(key=lambda t: (-counts[t], first_seen[t]))
    return Vocabulary.from_tokens(kept[:max_size])


def encode_text(text: str, vocab: Vocabulary, seq_len: int) -> tuple:
    """Token ids, tail-truncated then tail-padded to seq_len; returns (ids, length)."""
    tokens = tokenize(text)[:seq_len]
    ids = np.full(seq_len, PAD_INDEX, dtype=np.int64)
    for i, tok in enumerate(tokens):
        ids[i] = vocab.index(tok)
    return ids, len(tokens)


@dataclass
class EncodedDataset:
    ids: np.ndarray      # N x seq_len int64
    labels: np.ndarray   # N x K float64
    lengths: np.ndarray  # N
    label_names: list
    seq_len: int

    def __len__(self) -> int:
        return self.ids.shape[0]

    def subset(self, indices) -> "EncodedDataset":
        idx = np.asarray(indices)
        return EncodedDataset(
            self.ids[idx], self.labels[idx], self.lengths[idx], self.label_names, self.seq_len
        )


def encode(corpus: Corpus, vocab: Vocabulary, seq_len: int) -> EncodedDataset:
    n = len(corpus)
    ids = np.zeros((n, seq_len), dtype=np.int64)
    lengths = np.zeros(n, dtype=np.int64)
    for i, record in enumerate(corpus.records):
        ids[i], lengths[i] = encode_text(record.text, vocab, seq_len)
    labels = corpus.label_matrix().astype(np.float64)
    return EncodedDataset(ids, labels, lengths, list(corpus.label_names), seq_len)


@dataclass
class EncodedBatch:
    ids: np.ndarray      # B x seq_len
    labels: np.ndarray   # B x K
    lengths: np.ndarray  # B


def batches(dataset: EncodedDataset, batch_size: int, rng: Rng):
    """One epoch of seeded-shuffle mini-batches; the last may be smaller."""
    if batch_size < 1:
        raise ValueError(f"batch size must be >= 1, got {batch_size}")
    order = rng.permutation(len(dataset))
    for start in range(0, len(dataset), batch_size):
        idx = order[start:start + batch_size]
        yield EncodedBatch(dataset.ids[idx], dataset.labels[idx], dataset.lengths[idx])


# ---------------------------------------------------------------------------
# embedding files

@dataclass
class EmbeddingMatrix:
    matrix: np.ndarray  # V x dim, rows 0/1 and uncovered rows zero
    covered: int        # vocabulary tokens found in the file
    dim: int

    @property
    def vocab_size(self) -> int:
        return self.matrix.shape[0]

    @property
    def coverage(self) -> float:
        real = self.vocab_size - 2
        return self.covered / real if real else 0.0

    @property
    def zero_rows(self) -> int:
        return self.vocab_size - self.covered


def load_embeddings(path, vocab: Vocabulary, dim: int = 300) -> EmbeddingMatrix:
    """Text-format vectors: ``token v1 .. v_dim`` per line; an optional
    fastText-style ``count dim`` header line is skipped.  First occurrence of
    a token wins."""
    path = Path(path)
    if not path.exists():
        raise DataError(f"embedding file not found: {path}")
    matrix = np.zeros((len(vocab), dim), dtype=np.float64)
    filled = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split(" ")
            if line_no == 1 and len(parts) == 2:
                try:
                    header_dim = int(parts[1])
                    int(parts[0])
                except ValueError:
                    header_dim = None  # not a header; fall through to vector parsing
                if header_dim is not None:
                    if header_dim != dim:
                        raise DataError(
                            f"{path} line 1: file dimension {header_dim} != expected {dim}"
                        )
                    continue
            if not line.strip():
                continue
            token, values = parts[0], parts[1:]
            if len(values) != dim:
                raise DataError(
                    f"{path} line {line_no}: expected {dim} values, got {len(values)}"
                )
            index = vocab.token_to_index.get(token)
            if index is None or index in filled:
                continue
            try:
                matrix[index] = [float(v) for v in values]
            except ValueError as exc:
                raise DataError(f"{path} line {line_no}: unparseable float ({exc})") from None
            filled.add(index)
    return EmbeddingMatrix(matrix=matrix, covered=len(filled), dim=dim)


# ---------------------------------------------------------------------------
# dataset statistics

_STARTS = None
_ENDS = None
_IDX = None


def _script_table():
    global _STARTS, _ENDS, _IDX
    if _STARTS is None:
        triples = [
            tuple(int(p, 16) for p in entry.split(":"))
            for entry in _script_ranges.PACKED_RANGES.split(";")
        ]
        _STARTS = [t[0] for t in triples]
        _ENDS = [t[1] for t in triples]
        _IDX = [t[2] for t in triples]
    return _STARTS, _ENDS, _IDX


def script_of(char: str) -> str:
    """Unicode script property name, or 'Unknown' for unassigned codepoints."""
    starts, ends, idx = _script_table()
    cp = ord(char)
    i = bisect_right(starts, cp) - 1
    if i >= 0 and cp <= ends[i]:
        return _script_ranges.SCRIPT_NAMES[idx[i]]
    return "Unknown"


@dataclass
class ScriptHistogram:
    counts: dict  # script name -> number of documents containing it

    def top(self, k: int = 30) -> list:
        items = sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return items[:k]

    def __add__(self, other: "ScriptHistogram") -> "ScriptHistogram":
        merged = Counter(self.counts)
        merged.update(other.counts)
        return ScriptHistogram(dict(merged))


def detect_scripts(corpus: Corpus) -> ScriptHistogram:
    """Each document counts once per distinct script it contains.

    Common codepoints (punctuation, digits, spaces) are ignored; Inherited
    marks count as their own script.  The script table is pinned to the
    Unicode version recorded in ``_script_ranges.UNICODE_VERSION``.
    """
    counts = Counter()
    for record in corpus.records:
        seen = set()
        for ch in record.text:
            name = script_of(ch)
            if name not in ("Common", "Unknown"):
                seen.add(name)
        counts.update(seen)
    return ScriptHistogram(dict(counts))


@dataclass
class LabelStats:
    positives: dict        # label -> count
    fractions: dict        # label -> fraction of records
    cardinality: dict      # number of positive labels -> record count
    n_records: int


def label_stats(corpus: Corpus) -> LabelStats:
    matrix = corpus.label_matrix()
    n = len(corpus)
    positives = {name: int(matrix[:, i].sum()) for i, name in enumerate(corpus.label_names)}
    fractions = {name: (count / n if n else 0.0) for name, count in positives.items()}
    per_record = matrix.sum(axis=1) if n else np.zeros(0)
    cardinality = dict(sorted(Counter(int(c) for c in per_record).items()))
    return LabelStats(positives, fractions, cardinality, n)


def term_frequencies(corpus: Corpus, label: str = None, cls: int = 1,
                     top_k: int = 1000) -> list:
    """Ranked (token, count) pairs over records matching the label filter.

    ``label=None`` counts the whole corpus.  Ties break lexicographically.
    """
    if label is not None and label not in corpus.label_names:
        raise DataError(f"unknown label {label!r}; corpus has {corpus.label_names}")
    index = corpus.label_names.index(label) if label is not None else None
    counts = Counter()
    for record in corpus.records:
        if index is not None and int(record.labels[index]) != cls:
            continue
        counts.update(tokenize(record.text))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:top_k]


# ---------------------------------------------------------------------------
# synthetic corpora

def synthetic_corpus(n_records: int, label_names: list, keyword_rules: dict,
                     fractions: dict, seed: int, noise_vocab_size: int = 200,
                     min_len: int = 6, max_len: int = 12) -> Corpus:
    """Seeded corpus whose labels are decided by planted keywords.

    A record is positive for a label iff one of that label's keywords was
    inserted, so any rescan of the text reproduces the labels exactly.
    """
    if n_records < 1:
        raise DataError("synthetic corpus needs at least one record")
    if not label_names:
        raise DataError("synthetic corpus needs at least one label")
    for name in label_names:
        if not keyword_rules.get(name):
            raise DataError(f"label {name!r} has no keywords")
        frac = fractions.get(name)
        if frac is None or not 0.0 < frac <= 1.0:
            raise DataError(f"label {name!r} needs a fraction in (0, 1], got {frac}")
    all_keywords = {kw for kws in keyword_rules.values() for kw in kws}
    rng = Rng(seed)
    noise = [f"filler{i}" for i in range(noise_vocab_size)]
    if set(noise) & all_keywords:
        raise DataError("keywords collide with the noise vocabulary")
    records = []
    for i in range(n_records):
        length = min_len + rng.below(max_len - min_len + 1)
        tokens = [noise[rng.below(noise_vocab_size)] for _ in range(length)]
        labels = np.zeros(len(label_names), dtype=np.uint8)
        for li, name in enumerate(label_names):
            if rng.uniform(1)[0] < fractions[name]:
                labels[li] = 1
                keywords = keyword_rules[name]
                keyword = keywords[rng.below(len(keywords))]
                tokens.insert(rng.below(len(tokens) + 1), keyword)
        records.append(Record(id=f"syn{i:05d}", text=" ".join(tokens), labels=labels))
    return Corpus(records=records, label_names=list(label_names))
