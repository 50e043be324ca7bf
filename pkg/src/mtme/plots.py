"""Matplotlib figure rendering for the CLI report paths.

Every function writes one PNG next to the machine-readable output and
returns the path.  The Agg backend is forced so rendering works headless.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_DPI = 120


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def label_counts_figure(stats, path) -> Path:
    """Per-class positive counts (bar chart)."""
    labels = list(stats.positives)
    counts = [stats.positives[k] for k in labels]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(range(len(labels)), counts, color="#4878a8")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_ylabel("positive records")
    ax.set_title(f"Positive count per label (n={stats.n_records})")
    for i, c in enumerate(counts):
        ax.text(i, c, str(c), ha="center", va="bottom", fontsize=8)
    return _save(fig, path)


def cardinality_figure(stats, path) -> Path:
    """How many labels each record carries (bar chart)."""
    keys = sorted(stats.cardinality)
    values = [stats.cardinality[k] for k in keys]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar([str(k) for k in keys], values, color="#a85448")
    ax.set_xlabel("labels per record")
    ax.set_ylabel("records")
    ax.set_title("Multi-label cardinality")
    for i, v in enumerate(values):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=8)
    return _save(fig, path)


def script_histogram_figure(histogram, path, top_k: int = 30) -> Path:
    """Top-k Unicode scripts by document count (log scale)."""
    items = histogram.top(top_k)
    names = [n for n, _ in items]
    counts = [c for _, c in items]
    fig, ax = plt.subplots(figsize=(8, max(3, 0.3 * len(names))))
    ax.barh(range(len(names))[::-1], counts, color="#48a878")
    ax.set_yticks(range(len(names))[::-1])
    ax.set_yticklabels(names, fontsize=8)
    if counts and max(counts) / max(1, min(counts)) > 50:
        ax.set_xscale("log")
    ax.set_xlabel("documents")
    ax.set_title(f"Unicode scripts (top {len(names)})")
    return _save(fig, path)


def term_frequency_figure(terms, title, path, top_k: int = 25) -> Path:
    """Highest-frequency tokens for one label class (horizontal bars)."""
    shown = terms[:top_k]
    names = [t for t, _ in shown]
    counts = [c for _, c in shown]
    fig, ax = plt.subplots(figsize=(7, max(3, 0.28 * len(names))))
    ax.barh(range(len(names))[::-1], counts, color="#7858a8")
    ax.set_yticks(range(len(names))[::-1])
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xlabel("occurrences")
    ax.set_title(title)
    return _save(fig, path)


def history_figure(history, path) -> Path:
    """Training and validation loss per epoch."""
    epochs = [e["epoch"] for e in history["epochs"]]
    fig, ax = plt.subplots(figsize=(7, 4))
    tasks = list(history["epochs"][0]["train_loss"]) if epochs else []
    for task in tasks:
        ax.plot(epochs, [e["train_loss"][task] for e in history["epochs"]],
                marker="o", markersize=3, label=f"train {task}")
    ax.plot(epochs, [e["val_loss"] for e in history["epochs"]],
            marker="s", markersize=3, color="black", label="validation (main)")
    if history.get("best_epoch"):
        ax.axvline(history["best_epoch"], color="gray", linestyle=":", linewidth=1)
    ax.set_xlabel("epoch")
    ax.set_ylabel("BCE loss")
    ax.set_title("Training history")
    ax.legend(fontsize=8)
    return _save(fig, path)


def comparison_figure(results, path) -> Path:
    """Class-1 F1 per label, grouped by model, with recall overlaid as dots."""
    labels = results[0].label_names
    width = 0.8 / len(results)
    fig, ax = plt.subplots(figsize=(max(7, 1.4 * len(labels)), 4.5))
    for mi, table in enumerate(results):
        xs = [i + mi * width for i in range(len(labels))]
        ax.bar(xs, [r.class1.f1 for r in table.reports], width=width,
               label=f"{table.model_id} F1", alpha=0.85)
        ax.plot(xs, [r.class1.recall for r in table.reports], "k.", markersize=5)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(labels))])
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("class-1 score (dots: recall)")
    ax.set_title("Per-label positive-class comparison")
    ax.legend(fontsize=8)
    return _save(fig, path)
