"""Architecture assembly and serialization.

Four architectures share one parameter-map representation:

* ``multitask`` - per embedding source: spatial dropout, parallel BiGRU and
  BiLSTM (hidden 128), one Conv1D(64, k=2) per RNN branch, branch-wise
  channel concatenation, max+avg pooling over time, and one sigmoid dense
  head per task.  Trunk parameters are hard-shared across every task.
* ``birnncnn`` - the same trunk with a single embedding source and a single
  head.
* ``bigru`` - two stacked bidirectional GRU layers, global max pooling,
  sigmoid head.
* ``cnn`` - four parallel Conv1D banks (300 filters, kernels 2/3/4/5),
  global max pooling, a 36-unit ReLU dense layer, sigmoid head.

Parameter names are ``trunk.*`` for shared weights and ``head.<task>.*`` for
per-task outputs, so the hard-sharing boundary is visible in the name map.

The model file format ("MTME"): magic, u32 version, u32 tensor count, then
per tensor (sorted by name): u32 name length, UTF-8 name, u32 rank, u32
dims, float32 little-endian values.  Structure needed to rebuild a runnable
model (arch kind, task order, embedding sources, sequence length, dropout
rate) travels as reserved ``__meta__``-style tensors inside the same format.
"""

import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import layers as L
from . import tensor as T
from .rng import Rng
from .tensor import Tensor

ARCH_KINDS = ("multitask", "bigru", "cnn", "birnncnn")

FORMAT_MAGIC = b"MTME"
FORMAT_VERSION = 1

CNN_BASELINE_FILTERS = 300
CNN_BASELINE_KERNELS = (2, 3, 4, 5)
CNN_BASELINE_HIDDEN = 36


class ConfigError(ValueError):
    """Invalid architecture or run configuration."""


class FormatError(ValueError):
    """Corrupt or truncated model file."""


@dataclass
class TaskHead:
    name: str
    out_dim: int

    def __post_init__(self):
        if self.out_dim < 1:
            raise ConfigError(f"task {self.name!r} needs out_dim >= 1, got {self.out_dim}")


@dataclass
class MultiTaskConfig:
    embedding_sources: list
    tasks: list
    seq_len: int = 100
    rnn_hidden: int = 128
    cnn_filters: int = 64
    cnn_kernel: int = 2
    dropout_rate: float = 0.2

    def __post_init__(self):
        if not self.embedding_sources:
            raise ConfigError("at least one embedding source is required")
        if not self.tasks:
            raise ConfigError("at least one task is required")
        names = [t.name for t in self.tasks]
        if len(set(names)) != len(names):
            raise ConfigError(f"task names must be unique, got {names}")
        if self.seq_len < 1 or self.rnn_hidden < 1 or self.cnn_filters < 1 or self.cnn_kernel < 1:
            raise ConfigError("seq_len, rnn_hidden, cnn_filters and cnn_kernel must be >= 1")
        if not 0.0 <= self.dropout_rate < 1.0:
            raise ConfigError(f"dropout_rate must be in [0, 1), got {self.dropout_rate}")

    def task(self, name: str) -> TaskHead:
        for t in self.tasks:
            if t.name == name:
                return t
        raise ConfigError(f"unknown task {name!r}; tasks: {[t.name for t in self.tasks]}")


@dataclass
class ModelParams:
    params: dict                 # name -> Tensor
    arch_kind: str
    config: MultiTaskConfig
    tables: list = field(default_factory=list)  # EmbeddingTable per source

    def trainable(self) -> dict:
        return {n: t for n, t in self.params.items() if t.requires_grad}

    def trunk_names(self) -> list:
        return sorted(n for n, t in self.params.items()
                      if n.startswith("trunk.") and t.requires_grad)

    def head_names(self, task: str) -> list:
        prefix = f"head.{task}."
        return sorted(n for n in self.params if n.startswith(prefix))

    def task_names(self) -> list:
        return [t.name for t in self.config.tasks]


_GRU_FIELDS = ("wz", "uz", "bz", "wr", "ur", "br", "wh", "uh", "bh")
_LSTM_FIELDS = ("wi", "ui", "bi", "wf", "uf", "bf", "wo", "uo", "bo", "wg", "ug", "bg")


def _add_gru(params, prefix, in_size, hidden, rng):
    p = L.gru_params(in_size, hidden, rng)
    for name in _GRU_FIELDS:
        params[f"{prefix}.{name}"] = getattr(p, name)


def _add_lstm(params, prefix, in_size, hidden, rng):
    p = L.lstm_params(in_size, hidden, rng)
    for name in _LSTM_FIELDS:
        params[f"{prefix}.{name}"] = getattr(p, name)


def _add_conv(params, prefix, filters, in_channels, kernel, rng):
    p = L.conv1d_params(filters, in_channels, kernel, rng)
    params[f"{prefix}.kernels"] = p.kernels
    params[f"{prefix}.bias"] = p.bias


def _add_dense(params, prefix, in_dim, out_dim, rng):
    p = L.dense_params(in_dim, out_dim, "sigmoid", rng)
    params[f"{prefix}.w"] = p.W
    params[f"{prefix}.b"] = p.b


def _gru_at(params, prefix) -> L.GruParams:
    return L.GruParams(*[params[f"{prefix}.{n}"] for n in _GRU_FIELDS])


def _lstm_at(params, prefix) -> L.LstmParams:
    return L.LstmParams(*[params[f"{prefix}.{n}"] for n in _LSTM_FIELDS])


def _conv_at(params, prefix) -> L.Conv1dParams:
    return L.Conv1dParams(params[f"{prefix}.kernels"], params[f"{prefix}.bias"])


def _dense_at(params, prefix, activation) -> L.DenseParams:
    return L.DenseParams(params[f"{prefix}.w"], params[f"{prefix}.b"], activation)


def _check_tables(cfg: MultiTaskConfig, tables) -> None:
    if len(tables) != len(cfg.embedding_sources):
        raise ConfigError(
            f"{len(cfg.embedding_sources)} embedding sources but {len(tables)} tables"
        )
    sizes = {t.vocab_size for t in tables}
    if len(sizes) > 1:
        raise ConfigError(f"embedding tables disagree on vocabulary size: {sorted(sizes)}")


def trunk_feature_dim(cfg: MultiTaskConfig) -> int:
    """Dual pooling over two RNN branches: 4 x (#embeddings x cnn_filters)."""
    return 4 * len(cfg.embedding_sources) * cfg.cnn_filters


def build_multitask(cfg: MultiTaskConfig, tables, rng: Rng) -> ModelParams:
    _check_tables(cfg, tables)
    params = {}
    hidden = cfg.rnn_hidden
    for ei, table in enumerate(tables):
        prefix = f"trunk.emb{ei}"
        params[f"{prefix}.table"] = table.matrix
        _add_gru(params, f"{prefix}.gru.fwd", table.dim, hidden, rng)
        _add_gru(params, f"{prefix}.gru.bwd", table.dim, hidden, rng)
        _add_lstm(params, f"{prefix}.lstm.fwd", table.dim, hidden, rng)
        _add_lstm(params, f"{prefix}.lstm.bwd", table.dim, hidden, rng)
        _add_conv(params, f"{prefix}.cnn_gru", cfg.cnn_filters, 2 * hidden, cfg.cnn_kernel, rng)
        _add_conv(params, f"{prefix}.cnn_lstm", cfg.cnn_filters, 2 * hidden, cfg.cnn_kernel, rng)
    feat = trunk_feature_dim(cfg)
    for task in cfg.tasks:
        _add_dense(params, f"head.{task.name}", feat, task.out_dim, rng)
    return ModelParams(params, "multitask", cfg, list(tables))


def build_birnncnn(cfg: MultiTaskConfig, table, rng: Rng) -> ModelParams:
    if len(cfg.embedding_sources) != 1 or len(cfg.tasks) != 1:
        raise ConfigError("birnncnn takes exactly one embedding source and one task")
    model = build_multitask(cfg, [table], rng)
    model.arch_kind = "birnncnn"
    return model


def build_bigru(cfg: MultiTaskConfig, table, rng: Rng) -> ModelParams:
    if len(cfg.embedding_sources) != 1 or len(cfg.tasks) != 1:
        raise ConfigError("bigru takes exactly one embedding source and one task")
    params = {"trunk.emb0.table": table.matrix}
    hidden = cfg.rnn_hidden
    _add_gru(params, "trunk.rnn1.fwd", table.dim, hidden, rng)
    _add_gru(params, "trunk.rnn1.bwd", table.dim, hidden, rng)
    _add_gru(params, "trunk.rnn2.fwd", 2 * hidden, hidden, rng)
    _add_gru(params, "trunk.rnn2.bwd", 2 * hidden, hidden, rng)
    task = cfg.tasks[0]
    _add_dense(params, f"head.{task.name}", 2 * hidden, task.out_dim, rng)
    return ModelParams(params, "bigru", cfg, [table])


def build_cnn(cfg: MultiTaskConfig, table, rng: Rng) -> ModelParams:
    if len(cfg.embedding_sources) != 1 or len(cfg.tasks) != 1:
        raise ConfigError("cnn takes exactly one embedding source and one task")
    if cfg.seq_len < max(CNN_BASELINE_KERNELS):
        raise L.SequenceTooShortError(
            f"cnn baseline needs seq_len >= {max(CNN_BASELINE_KERNELS)}, got {cfg.seq_len}"
        )
    params = {"trunk.emb0.table": table.matrix}
    for k in CNN_BASELINE_KERNELS:
        _add_conv(params, f"trunk.cnnk{k}", CNN_BASELINE_FILTERS, table.dim, k, rng)
    concat_dim = CNN_BASELINE_FILTERS * len(CNN_BASELINE_KERNELS)
    hidden = L.dense_params(concat_dim, CNN_BASELINE_HIDDEN, "relu", rng)
    params["trunk.hidden.w"] = hidden.W
    params["trunk.hidden.b"] = hidden.b
    task = cfg.tasks[0]
    _add_dense(params, f"head.{task.name}", CNN_BASELINE_HIDDEN, task.out_dim, rng)
    return ModelParams(params, "cnn", cfg, [table])


def build(arch_kind: str, cfg: MultiTaskConfig, tables, rng: Rng) -> ModelParams:
    if arch_kind == "multitask":
        return build_multitask(cfg, tables, rng)
    builders = {"bigru": build_bigru, "cnn": build_cnn, "birnncnn": build_birnncnn}
    if arch_kind not in builders:
        raise ConfigError(f"unknown architecture {arch_kind!r}; choose from {ARCH_KINDS}")
    if len(tables) != 1:
        raise ConfigError(f"{arch_kind} takes exactly one embedding table")
    return builders[arch_kind](cfg, tables[0], rng)


def _stack_steps(steps) -> Tensor:
    return T.concat([T.reshape(s, (1,) + s.shape) for s in steps], axis=0)


def _rnn_cnn_trunk(model: ModelParams, ids, training, rng):
    cfg = model.config
    drop = cfg.dropout_rate
    gru_branch = []   # per embedding: list of (B x filters) steps
    lstm_branch = []
    for ei, table in enumerate(model.tables):
        prefix = f"trunk.emb{ei}"
        steps = L.embed_steps(ids, table)
        steps = L.spatial_dropout_steps(steps, drop, rng, training)
        gru_out = L.bidirectional_steps(
            steps, _gru_at(model.params, f"{prefix}.gru.fwd"),
            _gru_at(model.params, f"{prefix}.gru.bwd"))
        gru_out = L.dropout_steps(gru_out, drop, rng, training)
        lstm_out = L.bidirectional_steps(
            steps, _lstm_at(model.params, f"{prefix}.lstm.fwd"),
            _lstm_at(model.params, f"{prefix}.lstm.bwd"))
        lstm_out = L.dropout_steps(lstm_out, drop, rng, training)
        conv_gru = L.conv1d_steps(gru_out, _conv_at(model.params, f"{prefix}.cnn_gru"))
        conv_gru = L.dropout_steps(conv_gru, drop, rng, training)
        conv_lstm = L.conv1d_steps(lstm_out, _conv_at(model.params, f"{prefix}.cnn_lstm"))
        conv_lstm = L.dropout_steps(conv_lstm, drop, rng, training)
        gru_branch.append(conv_gru)
        lstm_branch.append(conv_lstm)

    def branch_pool(branch):
        n_steps = len(branch[0])
        merged = [T.concat([emb[t] for emb in branch], axis=1) for t in range(n_steps)]
        stacked = _stack_steps(merged)
        return T.pool_over_time("max", stacked), T.pool_over_time("avg", stacked)

    lstm_max, lstm_avg = branch_pool(lstm_branch)
    gru_max, gru_avg = branch_pool(gru_branch)
    return T.concat([lstm_max, gru_max, lstm_avg, gru_avg], axis=1)


def _bigru_trunk(model: ModelParams, ids, training, rng):
    steps = L.embed_steps(ids, model.tables[0])
    h1 = L.bidirectional_steps(steps, _gru_at(model.params, "trunk.rnn1.fwd"),
                               _gru_at(model.params, "trunk.rnn1.bwd"))
    h2 = L.bidirectional_steps(h1, _gru_at(model.params, "trunk.rnn2.fwd"),
                               _gru_at(model.params, "trunk.rnn2.bwd"))
    return T.pool_over_time("max", _stack_steps(h2))


def _cnn_trunk(model: ModelParams, ids, training, rng):
    steps = L.embed_steps(ids, model.tables[0])
    pooled = []
    for k in CNN_BASELINE_KERNELS:
        conv = L.conv1d_steps(steps, _conv_at(model.params, f"trunk.cnnk{k}"))
        pooled.append(T.pool_over_time("max", _stack_steps(conv)))
    feats = T.concat(pooled, axis=1)
    return L.dense_forward(feats, _dense_at(model.params, "trunk.hidden", "relu"))


def trunk_features(model: ModelParams, ids, training: bool = False, rng: Rng = None) -> Tensor:
    """Shared feature vector (identical for every task of a model)."""
    ids = np.asarray(ids)
    if ids.ndim != 2:
        raise ConfigError(f"ids must be B x L, got shape {ids.shape}")
    if training and model.config.dropout_rate > 0.0 and rng is None:
        raise ConfigError("training-mode forward with dropout needs an rng")
    if model.arch_kind in ("multitask", "birnncnn"):
        return _rnn_cnn_trunk(model, ids, training, rng)
    if model.arch_kind == "bigru":
        return _bigru_trunk(model, ids, training, rng)
    if model.arch_kind == "cnn":
        return _cnn_trunk(model, ids, training, rng)
    raise ConfigError(f"unknown architecture {model.arch_kind!r}")


def forward(model: ModelParams, ids, task: str, training: bool = False,
            rng: Rng = None) -> Tensor:
    """Sigmoid probabilities (B x out_dim) for one task's head."""
    head = model.config.task(task)
    feats = trunk_features(model, ids, training, rng)
    return L.dense_forward(feats, _dense_at(model.params, f"head.{head.name}", "sigmoid"))


# ---------------------------------------------------------------------------
# serialization

def _meta_tensors(model: ModelParams) -> dict:
    cfg = model.config
    meta = {
        "__meta__": np.asarray(
            [ARCH_KINDS.index(model.arch_kind), cfg.seq_len, cfg.dropout_rate,
             cfg.rnn_hidden, cfg.cnn_filters, cfg.cnn_kernel], dtype=np.float64)
    }
    for i, source in enumerate(cfg.embedding_sources):
        dim = model.tables[i].dim if i < len(model.tables) else 0
        meta[f"__emb.{i}.{source}"] = np.asarray([dim], dtype=np.float64)
    for i, task in enumerate(cfg.tasks):
        meta[f"__task.{i}.{task.name}"] = np.asarray([task.out_dim], dtype=np.float64)
    return meta


def save_model(model: ModelParams, path) -> None:
    """Write the MTME binary; float64 values are quantized to float32."""
    entries = {name: t.data for name, t in model.params.items()}
    entries.update(_meta_tensors(model))
    blob = bytearray()
    blob += FORMAT_MAGIC
    blob += struct.pack("<II", FORMAT_VERSION, len(entries))
    for name in sorted(entries):
        encoded = name.encode("utf-8")
        values = entries[name]
        blob += struct.pack("<I", len(encoded))
        blob += encoded
        blob += struct.pack("<I", values.ndim)
        blob += struct.pack(f"<{values.ndim}I", *values.shape)
        blob += values.astype("<f4").tobytes()
    Path(path).write_bytes(bytes(blob))


def _read(blob: bytes, offset: int, count: int) -> tuple:
    if offset + count > len(blob):
        raise FormatError(
            f"truncated model file: needed {count} bytes at offset {offset}, "
            f"file has {len(blob)}"
        )
    return blob[offset:offset + count], offset + count


def read_tensors(path) -> dict:
    """Raw name -> float64 array map from an MTME file."""
    blob = Path(path).read_bytes()
    chunk, offset = _read(blob, 0, 4)
    if chunk != FORMAT_MAGIC:
        raise FormatError(f"bad magic {chunk!r} at byte 0 (expected {FORMAT_MAGIC!r})")
    chunk, offset = _read(blob, offset, 8)
    version, count = struct.unpack("<II", chunk)
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {version} at byte 4")
    tensors = {}
    for _ in range(count):
        chunk, offset = _read(blob, offset, 4)
        (name_len,) = struct.unpack("<I", chunk)
        chunk, offset = _read(blob, offset, name_len)
        name = chunk.decode("utf-8")
        chunk, offset = _read(blob, offset, 4)
        (rank,) = struct.unpack("<I", chunk)
        chunk, offset = _read(blob, offset, 4 * rank)
        dims = struct.unpack(f"<{rank}I", chunk)
        numel = int(np.prod(dims)) if rank else 1
        chunk, offset = _read(blob, offset, 4 * numel)
        values = np.frombuffer(chunk, dtype="<f4").astype(np.float64).reshape(dims)
        tensors[name] = values
    if offset != len(blob):
        raise FormatError(f"{len(blob) - offset} trailing bytes at offset {offset}")
    return tensors


def load_model(path) -> ModelParams:
    tensors = read_tensors(path)
    if "__meta__" not in tensors:
        raise FormatError("model file lacks the __meta__ record")
    meta = tensors.pop("__meta__")
    arch_kind = ARCH_KINDS[int(meta[0])]
    sources, tasks = [], []
    for name in sorted(list(tensors)):
        if name.startswith("__emb."):
            _, idx, source = name.split(".", 2)
            sources.append((int(idx), source))
            tensors.pop(name)
        elif name.startswith("__task."):
            _, idx, task = name.split(".", 2)
            tasks.append((int(idx), task, int(tensors.pop(name)[0])))
    cfg = MultiTaskConfig(
        embedding_sources=[s for _, s in sorted(sources)],
        tasks=[TaskHead(name, dim) for _, name, dim in sorted(tasks)],
        seq_len=int(meta[1]),
        dropout_rate=float(meta[2]),
        rnn_hidden=int(meta[3]),
        cnn_filters=int(meta[4]),
        cnn_kernel=int(meta[5]),
    )
    params = {}
    tables = []
    for name, values in tensors.items():
        frozen = name.endswith(".table")
        params[name] = Tensor(values, requires_grad=not frozen)
    for ei in range(len(cfg.embedding_sources)):
        key = f"trunk.emb{ei}.table"
        if key not in params:
            raise FormatError(f"model file lacks embedding table {key}")
        tables.append(L.EmbeddingTable(params[key].data))
        params[key] = tables[-1].matrix
    return ModelParams(params, arch_kind, cfg, tables)


def clone_params(model: ModelParams) -> dict:
    """Deep copy of the trainable values (for early-stopping snapshots)."""
    return {n: t.data.copy() for n, t in model.params.items() if t.requires_grad}


def restore_params(model: ModelParams, snapshot: dict) -> None:
    for name, values in snapshot.items():
        model.params[name].data[...] = values
