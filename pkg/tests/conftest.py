import numpy as np
import pytest

from mtme import data as D
from mtme import model as MD
from mtme.layers import random_table
from mtme.rng import Rng


JIGSAW_LABELS = ["toxic", "severe_toxic", "obscene", "threat", "insult", "identity_hate"]


def write_csv(path, rows, label_names=JIGSAW_LABELS, text_col="comment_text", id_col="id"):
    """rows: list of (id, text, label vector)."""
    import csv

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([id_col, text_col] + list(label_names))
        for rid, text, labels in rows:
            writer.writerow([rid, text] + list(labels))
    return path


@pytest.fixture
def tiny_corpus():
    """Six records over a small vocabulary; 'the' is the most frequent token."""
    rows = [
        ("a", "the cat sat on the mat", [1, 0, 0, 0, 0, 0]),
        ("b", "the dog sat", [0, 0, 0, 0, 0, 0]),
        ("c", "the cat ran", [1, 0, 1, 0, 0, 0]),
        ("d", "a bird flew over the mat", [0, 0, 0, 0, 0, 0]),
        ("e", "the dog barked at the cat", [0, 0, 0, 0, 1, 0]),
        ("f", "mat and cat", [0, 0, 0, 0, 0, 0]),
    ]
    records = [
        D.Record(id=r, text=t, labels=np.asarray(l, dtype=np.uint8)) for r, t, l in rows
    ]
    return D.Corpus(records=records, label_names=list(JIGSAW_LABELS))


# 12-row dataset with hand-counted statistics (see test_cli/test_acceptance):
# toxic 3, severe_toxic 1, obscene 1, threat 1, insult 2, identity_hate 1;
# cardinality {0: 7, 1: 1, 2: 4}; scripts Latin 10, Cyrillic 2, Arabic 1.
ANALYZE_FIXTURE_ROWS = [
    ("r01", "hello world", [0, 0, 0, 0, 0, 0]),
    ("r02", "hello there friend", [0, 0, 0, 0, 0, 0]),
    ("r03", "you fool", [1, 0, 0, 0, 1, 0]),
    ("r04", "kill you", [1, 0, 0, 1, 0, 0]),
    ("r05", "nasty obscene words", [0, 0, 1, 0, 0, 0]),
    ("r06", "worst vile severe", [1, 1, 0, 0, 0, 0]),
    ("r07", "quiet day", [0, 0, 0, 0, 0, 0]),
    ("r08", "привет друг", [0, 0, 0, 0, 0, 0]),
    ("r09", "مرحبا صديق", [0, 0, 0, 0, 0, 0]),
    ("r10", "mixed hello мир", [0, 0, 0, 0, 0, 0]),
    ("r11", "identity slur here", [0, 0, 0, 0, 1, 1]),
    ("r12", "plain text row", [0, 0, 0, 0, 0, 0]),
]

ANALYZE_EXPECTED_POSITIVES = {"toxic": 3, "severe_toxic": 1, "obscene": 1,
                              "threat": 1, "insult": 2, "identity_hate": 1}
ANALYZE_EXPECTED_CARDINALITY = {0: 7, 1: 1, 2: 4}
ANALYZE_EXPECTED_SCRIPTS = {"Latin": 10, "Cyrillic": 2, "Arabic": 1}


def toy_multitask_model(n_embeddings=2, tasks=None, seed=11, hidden=3, filters=2,
                        seq_len=6, vocab_size=9, dim=3, dropout=0.0):
    tasks = tasks or [MD.TaskHead("main", 2), MD.TaskHead("aux", 1)]
    cfg = MD.MultiTaskConfig(
        embedding_sources=[f"emb{i}" for i in range(n_embeddings)],
        tasks=tasks,
        seq_len=seq_len,
        rnn_hidden=hidden,
        cnn_filters=filters,
        cnn_kernel=2,
        dropout_rate=dropout,
    )
    rng = Rng(seed)
    tables = [random_table(vocab_size, dim, rng.stream(f"t{i}")) for i in range(n_embeddings)]
    return MD.build_multitask(cfg, tables, rng.stream("init"))
