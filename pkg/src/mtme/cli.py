"""Command-line interface: train, eval, analyze, gradcheck, compare.

Run configuration is a JSON file (see README for the schema); unknown keys
are rejected.  A few flags override file values.  Every command is a
deterministic function of (config, seed, inputs); machine-readable outputs
are byte-identical across reruns.

Exit codes: 0 success, 2 configuration error, 3 data error, 4 numerical
failure, 1 unexpected internal error.
"""

import argparse
import json
import sys
from pathlib import Path

from . import data as D
from . import gradcheck as GC
from . import metrics as M
from . import model as MD
from . import plots
from . import tensor as T
from . import training as TR
from .layers import EmbeddingTable, random_table
from .model import ConfigError
from .rng import Rng

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4

_TOP_KEYS = {"name", "arch", "seed", "output_dir", "model", "train", "vocab",
             "tasks", "embeddings"}
_MODEL_KEYS = {"seq_len", "rnn_hidden", "cnn_filters", "cnn_kernel", "dropout_rate"}
_TRAIN_KEYS = {"batch_size", "max_epochs", "patience", "validation_fraction",
               "threshold", "lr"}
_VOCAB_KEYS = {"min_freq", "max_size"}
_TASK_KEYS = {"name", "data", "schema", "test_data"}
_EMB_KEYS = {"name", "path", "dim", "random_dim", "seed"}


def _reject_unknown(mapping, allowed, where):
    unknown = set(mapping) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {sorted(unknown)}")


def load_run_config(path, overrides=None) -> dict:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        config = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(config, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    _reject_unknown(config, _TOP_KEYS, str(path))
    _reject_unknown(config.get("model", {}), _MODEL_KEYS, "model")
    _reject_unknown(config.get("train", {}), _TRAIN_KEYS, "train")
    _reject_unknown(config.get("vocab", {}), _VOCAB_KEYS, "vocab")
    for i, task in enumerate(config.get("tasks", [])):
        _reject_unknown(task, _TASK_KEYS, f"tasks[{i}]")
        for key in ("name", "data"):
            if key not in task:
                raise ConfigError(f"tasks[{i}] missing {key!r}")
    for i, emb in enumerate(config.get("embeddings", [])):
        _reject_unknown(emb, _EMB_KEYS, f"embeddings[{i}]")
        if "name" not in emb:
            raise ConfigError(f"embeddings[{i}] missing 'name'")
        if ("path" in emb) == ("random_dim" in emb):
            raise ConfigError(
                f"embeddings[{i}] needs exactly one of 'path' or 'random_dim'"
            )
    for key in ("arch", "tasks", "embeddings"):
        if not config.get(key):
            raise ConfigError(f"config missing {key!r}")
    if config["arch"] not in MD.ARCH_KINDS:
        raise ConfigError(
            f"unknown arch {config['arch']!r}; choose from {MD.ARCH_KINDS}"
        )
    for key, value in (overrides or {}).items():
        if value is not None:
            config[key] = value
    if not config.get("output_dir"):
        raise ConfigError("config missing 'output_dir' (or pass --output-dir)")
    config.setdefault("seed", 0)
    config.setdefault("name", config["arch"])
    return config


def _resolve_schema_arg(value):
    if value in D.SCHEMA_PRESETS:
        return value
    if value.lstrip().startswith("{"):
        try:
            return json.loads(value)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"inline schema is invalid JSON: {exc}") from None
    path = Path(value)
    if path.exists():
        return json.loads(path.read_text(encoding="utf-8"))
    raise ConfigError(
        f"schema {value!r} is neither a preset ({sorted(D.SCHEMA_PRESETS)}), "
        "nor inline JSON, nor an existing JSON file"
    )


def _build_tables(config, vocab):
    """Embedding tables aligned to the shared vocabulary, plus metadata."""
    tables, infos = [], []
    for entry in config["embeddings"]:
        name = entry["name"]
        if "path" in entry:
            dim = entry.get("dim", 300)
            matrix = D.load_embeddings(entry["path"], vocab, dim=dim)
            tables.append(EmbeddingTable(matrix.matrix))
            infos.append({"name": name, "kind": "file", "dim": dim,
                          "path": str(entry["path"]),
                          "covered": matrix.covered,
                          "coverage": matrix.coverage})
        else:
            dim = entry["random_dim"]
            seed = entry.get("seed", config["seed"])
            rng = Rng(seed).stream(f"embedding.{name}")
            tables.append(random_table(len(vocab), dim, rng))
            infos.append({"name": name, "kind": "random", "dim": dim, "seed": seed})
    return tables, infos


def execute_training(config) -> dict:
    """Shared train pipeline for the train and compare commands."""
    out_dir = Path(config["output_dir"])
    out_dir.mkdir(parents=True, exist_ok=True)

    corpora = {}
    for task in config["tasks"]:
        corpora[task["name"]] = D.load_csv(task["data"], task.get("schema", "jigsaw"))

    union = D.Corpus(
        records=[r for c in corpora.values() for r in c.records],
        label_names=[],
    )
    vocab_cfg = config.get("vocab", {})
    vocab = D.build_vocab(union, min_freq=vocab_cfg.get("min_freq", 2),
                          max_size=vocab_cfg.get("max_size", 100_000))

    tables, emb_infos = _build_tables(config, vocab)

    model_cfg = config.get("model", {})
    mt_cfg = MD.MultiTaskConfig(
        embedding_sources=[e["name"] for e in config["embeddings"]],
        tasks=[MD.TaskHead(t["name"], len(corpora[t["name"]].label_names))
               for t in config["tasks"]],
        seq_len=model_cfg.get("seq_len", 100),
        rnn_hidden=model_cfg.get("rnn_hidden", 128),
        cnn_filters=model_cfg.get("cnn_filters", 64),
        cnn_kernel=model_cfg.get("cnn_kernel", 2),
        dropout_rate=model_cfg.get("dropout_rate", 0.2),
    )

    init_rng = Rng(config["seed"]).stream("init")
    model = MD.build(config["arch"], mt_cfg, tables, init_rng)

    datasets = {
        name: D.encode(corpus, vocab, mt_cfg.seq_len)
        for name, corpus in corpora.items()
    }

    train_cfg_raw = config.get("train", {})
    train_cfg = TR.TrainConfig(
        max_epochs=train_cfg_raw.get("max_epochs", 10),
        seed=config["seed"],
        batch_size=train_cfg_raw.get("batch_size", 128),
        patience=train_cfg_raw.get("patience", 3),
        validation_fraction=train_cfg_raw.get("validation_fraction", 0.1),
        threshold=train_cfg_raw.get("threshold", 0.5),
        lr=train_cfg_raw.get("lr", 1e-3),
    )
    result = TR.train(model, datasets, train_cfg)

    model_path = out_dir / "model.mtme"
    MD.save_model(model, model_path)
    meta = {
        "name": config["name"],
        "arch": config["arch"],
        "seed": config["seed"],
        "seq_len": mt_cfg.seq_len,
        "threshold": train_cfg.threshold,
        "vocab_tokens": vocab.real_tokens,
        "tasks": [
            {"name": t["name"], "label_names": corpora[t["name"]].label_names}
            for t in config["tasks"]
        ],
        "embeddings": emb_infos,
    }
    with open(out_dir / "model.meta.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, sort_keys=True)
        fh.write("\n")
    with open(out_dir / "history.json", "w", encoding="utf-8") as fh:
        json.dump(result.history, fh, indent=2, sort_keys=True)
        fh.write("\n")

    table = TR.evaluate(
        result.model, result.validation, threshold=train_cfg.threshold,
        model_id=config["name"],
        dataset_flags=[t["name"] for t in config["tasks"]],
        embedding_flags=[e["name"] for e in config["embeddings"]],
    )
    M.write_report([table], out_dir)
    plots.history_figure(result.history, out_dir / "figures" / "history.png")
    plots.comparison_figure([table], out_dir / "figures" / "validation_f1.png")
    return {
        "out_dir": out_dir,
        "model": result.model,
        "history": result.history,
        "meta": meta,
        "validation_table": table,
    }


def load_bundle(model_path):
    """Model weights plus the JSON sidecar (vocabulary, label names)."""
    model_path = Path(model_path)
    model = MD.load_model(model_path)
    meta_path = model_path.with_name(model_path.stem + ".meta.json")
    if not meta_path.exists():
        raise D.DataError(f"model sidecar not found: {meta_path}")
    meta = json.loads(meta_path.read_text(encoding="utf-8"))
    vocab = D.Vocabulary.from_tokens(meta["vocab_tokens"])
    return model, meta, vocab


def cmd_train(args) -> int:
    config = load_run_config(args.config, {
        "output_dir": args.output_dir,
        "seed": args.seed,
    })
    if args.max_epochs is not None:
        config.setdefault("train", {})["max_epochs"] = args.max_epochs
    run = execute_training(config)
    history = run["history"]
    print(f"trained {config['arch']} for {history['epochs_run']} epochs "
          f"(best epoch {history['best_epoch']}, "
          f"val loss {history['best_val_loss']:.4f})")
    print(f"outputs in {run['out_dir']}")
    return EXIT_OK


def cmd_eval(args) -> int:
    model, meta, vocab = load_bundle(args.model)
    schema = _resolve_schema_arg(args.schema)
    corpus = D.load_csv(args.data, schema)
    main_task = meta["tasks"][0]
    if corpus.label_names != main_task["label_names"]:
        raise D.DataError(
            f"label set mismatch: model head expects {main_task['label_names']}, "
            f"data has {corpus.label_names}"
        )
    dataset = D.encode(corpus, vocab, meta["seq_len"])
    table = TR.evaluate(
        model, dataset, threshold=args.threshold,
        model_id=meta.get("name", model.arch_kind),
        dataset_flags=[t["name"] for t in meta["tasks"]],
        embedding_flags=[e["name"] for e in meta["embeddings"]],
        workers=args.workers,
    )
    out_dir = Path(args.out)
    paths = M.write_report([table], out_dir)
    plots.comparison_figure([table], out_dir / "figures" / "f1_by_label.png")
    print((out_dir / "table.txt").read_text(encoding="utf-8"))
    print(f"reports: {paths['json']}, {paths['csv']}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    schema = _resolve_schema_arg(args.schema)
    corpus = D.load_csv(args.data, schema)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    figures = out_dir / "figures"

    stats = D.label_stats(corpus)
    scripts = D.detect_scripts(corpus)
    top_terms = {"__all__": D.term_frequencies(corpus, top_k=args.top_k)}
    for label in corpus.label_names:
        top_terms[label] = D.term_frequencies(corpus, label, cls=1, top_k=args.top_k)

    report = {
        "n_records": stats.n_records,
        "label_names": corpus.label_names,
        "label_stats": {
            name: {"positives": stats.positives[name], "fraction": stats.fractions[name]}
            for name in corpus.label_names
        },
        "cardinality_histogram": {str(k): v for k, v in stats.cardinality.items()},
        "scripts": [[name, count] for name, count in scripts.top(30)],
        "unicode_version": D._script_ranges.UNICODE_VERSION,
        "top_terms": {k: [[t, c] for t, c in v] for k, v in top_terms.items()},
    }
    with open(out_dir / "analyze.json", "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")

    import csv as _csv
    for key, terms in top_terms.items():
        stem = "all" if key == "__all__" else key
        with open(out_dir / f"terms_{stem}.csv", "w", newline="", encoding="utf-8") as fh:
            writer = _csv.writer(fh)
            writer.writerow(["token", "count"])
            writer.writerows(terms)

    if corpus.label_names:
        plots.label_counts_figure(stats, figures / "label_counts.png")
    plots.cardinality_figure(stats, figures / "cardinality.png")
    plots.script_histogram_figure(scripts, figures / "scripts.png")
    for key, terms in top_terms.items():
        if terms:
            stem = "all" if key == "__all__" else key
            plots.term_frequency_figure(terms, f"Top tokens: {stem}",
                                        figures / f"terms_{stem}.png")
    print(f"analyzed {stats.n_records} records, "
          f"{len(corpus.label_names)} labels; reports in {out_dir}")
    return EXIT_OK


def cmd_gradcheck(args) -> int:
    scopes = GC.SCOPES if args.scope == "all" else (args.scope,)
    if args.corrupt_backward:
        T.set_backward_corruption(args.corrupt_backward, 1.5)
    try:
        results = GC.run_all(scopes, seed=args.seed)
    finally:
        T.clear_backward_corruption()
    all_ok = True
    for scope, err, ok in results:
        all_ok &= ok
        print(f"{scope:<10} max_rel_err={err:.3e}  {'PASS' if ok else 'FAIL'}")
    print(f"tolerance {GC.TOLERANCE:g}: {'all scopes pass' if all_ok else 'FAILURES'}")
    return EXIT_OK if all_ok else EXIT_NUMERIC


def cmd_compare(args) -> int:
    if len(args.configs) < 2:
        raise ConfigError("compare needs at least two run configs")
    configs = [load_run_config(p) for p in args.configs]

    test_specs = []
    for config in configs:
        main = config["tasks"][0]
        if "test_data" not in main:
            raise ConfigError(
                f"config {config['name']!r}: main task needs 'test_data' for compare"
            )
        test_specs.append((main["test_data"], json.dumps(main.get("schema", "jigsaw"),
                                                         sort_keys=True)))
    if len(set(test_specs)) != 1:
        raise ConfigError(f"configs disagree on the shared test split: {test_specs}")

    results = []
    for config in configs:
        model_path = Path(config["output_dir"]) / "model.mtme"
        if model_path.exists():
            model, meta, vocab = load_bundle(model_path)
            print(f"loaded {config['name']} from {model_path}")
        else:
            print(f"training {config['name']} ...")
            run = execute_training(config)
            model, meta = run["model"], run["meta"]
            vocab = D.Vocabulary.from_tokens(meta["vocab_tokens"])
        main = config["tasks"][0]
        corpus = D.load_csv(main["test_data"], main.get("schema", "jigsaw"))
        expected = meta["tasks"][0]["label_names"]
        if corpus.label_names != expected:
            raise D.DataError(
                f"label set mismatch for {config['name']!r}: model expects "
                f"{expected}, test data has {corpus.label_names}"
            )
        dataset = D.encode(corpus, vocab, meta["seq_len"])
        results.append(TR.evaluate(
            model, dataset, threshold=meta.get("threshold", 0.5),
            model_id=meta.get("name", model.arch_kind),
            dataset_flags=[t["name"] for t in meta["tasks"]],
            embedding_flags=[e["name"] for e in meta["embeddings"]],
        ))

    out_dir = Path(args.out)
    M.write_report(results, out_dir)
    plots.comparison_figure(results, out_dir / "figures" / "comparison.png")
    print((out_dir / "table.txt").read_text(encoding="utf-8"))

    # directional transfer observation, reported not asserted
    rare = min(
        results[0].label_names,
        key=lambda name: sum(
            r.reports[results[0].label_names.index(name)].class1.recall for r in results
        ),
    )
    idx = results[0].label_names.index(rare)
    recalls = ", ".join(
        f"{r.model_id}={r.reports[idx].class1.recall:.3f}" for r in results
    )
    print(f"rare-label recall ({rare}): {recalls}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtme",
        description="Multi-task multi-embedding text classification toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a model from a run config")
    p_train.add_argument("--config", required=True)
    p_train.add_argument("--output-dir", default=None)
    p_train.add_argument("--seed", type=int, default=None)
    p_train.add_argument("--max-epochs", type=int, default=None)
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("eval", help="evaluate a saved model on a CSV dataset")
    p_eval.add_argument("--model", required=True, help="path to model.mtme")
    p_eval.add_argument("--data", required=True)
    p_eval.add_argument("--schema", required=True,
                        help="schema preset name or JSON file")
    p_eval.add_argument("--out", required=True)
    p_eval.add_argument("--threshold", type=float, default=0.5)
    p_eval.add_argument("--workers", type=int, default=1,
                        help="parallel evaluation partitions; counts merge "
                             "by summation, results identical to --workers 1")
    p_eval.set_defaults(func=cmd_eval)

    p_analyze = sub.add_parser("analyze", help="dataset statistics and figures")
    p_analyze.add_argument("--data", required=True)
    p_analyze.add_argument("--schema", required=True)
    p_analyze.add_argument("--out", required=True)
    p_analyze.add_argument("--top-k", type=int, default=1000)
    p_analyze.set_defaults(func=cmd_analyze)

    p_grad = sub.add_parser("gradcheck", help="finite-difference gradient checks")
    p_grad.add_argument("--scope", default="all",
                        choices=("all",) + GC.SCOPES)
    p_grad.add_argument("--seed", type=int, default=1234)
    p_grad.add_argument("--corrupt-backward", default=None, metavar="OP",
                        help="test hook: scale OP's backward rule to force failure")
    p_grad.set_defaults(func=cmd_gradcheck)

    p_cmp = sub.add_parser("compare", help="train/load several configs and "
                                           "render one combined table")
    p_cmp.add_argument("configs", nargs="+")
    p_cmp.add_argument("--out", required=True)
    p_cmp.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (D.DataError, MD.FormatError, FileNotFoundError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except TR.TrainingError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
