"""Adam optimizer, the sequential multi-task step, and the epoch loop with
early stopping on main-task validation loss.

Optimizer state is grouped: the trunk has one AdamState whose step counter
advances once per task per multi-task step (it genuinely receives that many
updates), while each head has its own state advancing once per step.
"""

from dataclasses import dataclass, field

import numpy as np

from . import data as D
from . import metrics as M
from . import model as MD
from . import tensor as T
from .rng import Rng
from .tensor import Tensor


class TrainingError(RuntimeError):
    """Training aborted (NaN gradients, empty datasets, missing batches)."""


@dataclass
class AdamState:
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    t: int = 0
    m: dict = field(default_factory=dict)
    v: dict = field(default_factory=dict)


def adam_step(params: dict, grads: dict, state: AdamState) -> None:
    """One Adam update in place.  Parameters without a gradient entry are
    skipped (their moments stay untouched)."""
    state.t += 1
    t = state.t
    bias1 = 1.0 - state.beta1 ** t
    bias2 = 1.0 - state.beta2 ** t
    for name, param in params.items():
        grad = grads.get(name)
        if grad is None:
            continue
        g = grad.data if isinstance(grad, Tensor) else np.asarray(grad)
        if not np.all(np.isfinite(g)):
            raise TrainingError(f"non-finite gradient for parameter {name!r}")
        m = state.m.get(name)
        if m is None:
            m = np.zeros_like(param.data)
            v = np.zeros_like(param.data)
        else:
            v = state.v[name]
        m = state.beta1 * m + (1.0 - state.beta1) * g
        v = state.beta2 * v + (1.0 - state.beta2) * (g * g)
        state.m[name] = m
        state.v[name] = v
        param.data -= state.lr * (m / bias1) / (np.sqrt(v / bias2) + state.eps)


def make_optimizer(model: MD.ModelParams, lr: float = 1e-3) -> dict:
    """Per-group Adam states: one for the trunk, one per task head."""
    states = {"trunk": AdamState(lr=lr)}
    for task in model.task_names():
        states[f"head.{task}"] = AdamState(lr=lr)
    return states


def _named_grads(names, model, grads, tape):
    out = {}
    for name in names:
        g = T.grad_for(grads, model.params[name], tape)
        if g is not None:
            out[name] = g
    return out


def task_loss(model: MD.ModelParams, batch: D.EncodedBatch, task: str,
              training: bool, rng: Rng = None) -> Tensor:
    probs = MD.forward(model, batch.ids, task, training=training, rng=rng)
    return T.bce_loss(probs, Tensor(batch.labels))


def task_update(model: MD.ModelParams, task: str, batch: D.EncodedBatch,
                optimizer: dict, rng: Rng = None) -> float:
    """One optimizer application from one task's loss: touches the trunk and
    that task's head, nothing else."""
    with T.Tape() as tape:
        loss = task_loss(model, batch, task, training=True, rng=rng)
    grads = T.backward(loss, tape)
    trunk_names = model.trunk_names()
    head_names = model.head_names(task)
    step_grads = _named_grads(trunk_names, model, grads, tape)
    step_grads.update(_named_grads(head_names, model, grads, tape))
    adam_step({n: model.params[n] for n in trunk_names}, step_grads, optimizer["trunk"])
    adam_step({n: model.params[n] for n in head_names}, step_grads,
              optimizer[f"head.{task}"])
    return loss.item()


def multitask_step(model: MD.ModelParams, task_batches: dict, optimizer: dict,
                   rng: Rng = None) -> dict:
    """One sequential pass: for each task in declared order, forward, BCE,
    backward, Adam.  T tasks means exactly T optimizer applications; the
    trunk state advances once per task, each head state once."""
    tasks = model.task_names()
    missing = [t for t in tasks if t not in task_batches]
    if missing:
        raise TrainingError(f"missing batches for tasks: {missing}")
    return {task: task_update(model, task, task_batches[task], optimizer, rng)
            for task in tasks}


@dataclass
class TrainConfig:
    max_epochs: int
    seed: int = 0
    batch_size: int = 128
    patience: int = 3
    validation_fraction: float = 0.1
    threshold: float = 0.5
    lr: float = 1e-3

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {self.batch_size}")
        if not 0.0 < self.validation_fraction < 1.0:
            raise ValueError(
                f"validation_fraction must be in (0, 1), got {self.validation_fraction}"
            )
        if self.max_epochs < 1:
            raise ValueError(f"max_epochs must be >= 1, got {self.max_epochs}")
        if self.patience < 0:
            raise ValueError(f"patience must be >= 0, got {self.patience}")


def predict_probs(model: MD.ModelParams, ids, task: str = None,
                  batch_size: int = 256) -> np.ndarray:
    """Deterministic inference probabilities for a B x L id matrix."""
    task = task or model.task_names()[0]
    chunks = []
    for start in range(0, ids.shape[0], batch_size):
        probs = MD.forward(model, ids[start:start + batch_size], task, training=False)
        chunks.append(probs.data)
    return np.concatenate(chunks, axis=0)


def dataset_loss(model: MD.ModelParams, dataset: D.EncodedDataset, task: str,
                 batch_size: int = 256) -> float:
    """Mean BCE over a dataset in inference mode."""
    total = 0.0
    for start in range(0, len(dataset), batch_size):
        ids = dataset.ids[start:start + batch_size]
        labels = dataset.labels[start:start + batch_size]
        probs = MD.forward(model, ids, task, training=False)
        loss = T.bce_loss(probs, Tensor(labels))
        total += loss.item() * ids.shape[0]
    return total / len(dataset)


def _cycling_batches(dataset: D.EncodedDataset, batch_size: int, rng: Rng):
    while True:
        yield from D.batches(dataset, batch_size, rng)


@dataclass
class TrainResult:
    model: MD.ModelParams
    history: dict
    validation: D.EncodedDataset = None


@dataclass
class _EarlyStop:
    patience: int
    best_loss: float = np.inf
    best_epoch: int = 0
    since_improvement: int = 0
    snapshot: dict = None

    def observe(self, epoch: int, loss: float, model: MD.ModelParams) -> bool:
        """Record an epoch; returns True when training should stop."""
        if loss < self.best_loss:
            self.best_loss = loss
            self.best_epoch = epoch
            self.since_improvement = 0
            self.snapshot = MD.clone_params(model)
            return False
        self.since_improvement += 1
        return self.since_improvement > self.patience


def train(model: MD.ModelParams, task_datasets: dict, cfg: TrainConfig) -> TrainResult:
    """Epochs iterate the main (first) task; auxiliary datasets cycle.

    Early stopping watches main-task validation loss; the returned model
    carries the best snapshot seen.  The whole run is a deterministic
    function of (seed, data, config).
    """
    tasks = model.task_names()
    for task in tasks:
        ds = task_datasets.get(task)
        if ds is None or len(ds) == 0:
            raise TrainingError(f"task {task!r} has no training data")
    main = tasks[0]
    root = Rng(cfg.seed)
    dropout_rng = root.stream("dropout")
    split_rng = root.stream("split")

    main_ds = task_datasets[main]
    order = split_rng.permutation(len(main_ds))
    n_val = max(1, int(round(cfg.validation_fraction * len(main_ds))))
    if n_val >= len(main_ds):
        raise TrainingError("validation split leaves no training data")
    val_ds = main_ds.subset(order[:n_val])
    train_ds = main_ds.subset(order[n_val:])

    shuffle_rngs = {task: root.stream(f"shuffle.{task}") for task in tasks}
    aux_iters = {
        task: _cycling_batches(task_datasets[task], cfg.batch_size, shuffle_rngs[task])
        for task in tasks[1:]
    }

    optimizer = make_optimizer(model, lr=cfg.lr)
    stopper = _EarlyStop(patience=cfg.patience)
    epochs = []
    for epoch in range(1, cfg.max_epochs + 1):
        sums = {task: 0.0 for task in tasks}
        steps = 0
        for main_batch in D.batches(train_ds, cfg.batch_size, shuffle_rngs[main]):
            bundle = {main: main_batch}
            for task in tasks[1:]:
                bundle[task] = next(aux_iters[task])
            losses = multitask_step(model, bundle, optimizer, rng=dropout_rng)
            for task, value in losses.items():
                sums[task] += value
            steps += 1
        val_loss = dataset_loss(model, val_ds, main)
        probs = predict_probs(model, val_ds.ids, main)
        reports = [
            M.LabelReport.from_predictions(name, probs, val_ds.labels,
                                           cfg.threshold, label_index=i)
            for i, name in enumerate(val_ds.label_names)
        ]
        _, val_f1 = M.macro_average(reports)
        epochs.append({
            "epoch": epoch,
            "train_loss": {task: sums[task] / steps for task in tasks},
            "val_loss": val_loss,
            "val_f1_class1": val_f1,
        })
        if stopper.observe(epoch, val_loss, model):
            break
    if stopper.snapshot is not None:
        MD.restore_params(model, stopper.snapshot)
    history = {
        "epochs": epochs,
        "best_epoch": stopper.best_epoch,
        "best_val_loss": stopper.best_loss,
        "epochs_run": len(epochs),
        "seed": cfg.seed,
    }
    return TrainResult(model=model, history=history, validation=val_ds)


def _chunk_counts(model, dataset, task, threshold, start, stop):
    probs = predict_probs(model, dataset.ids[start:stop], task)
    labels = dataset.labels[start:stop]
    return [M.confusion_from_predictions(probs, labels, threshold, label_index=i)
            for i in range(labels.shape[1])]


def evaluate(model: MD.ModelParams, dataset: D.EncodedDataset,
             threshold: float = 0.5, task: str = None, model_id: str = None,
             dataset_flags=None, embedding_flags=None,
             workers: int = 1) -> M.EvaluationTable:
    """Thresholded predictions and per-label class 0/1 P/R/F1 reports.

    ``workers > 1`` partitions the dataset and merges per-partition confusion
    counts by summation, which is order-independent, so the result is
    identical to the single-threaded path.
    """
    task = task or model.task_names()[0]
    out_dim = model.config.task(task).out_dim
    if out_dim != len(dataset.label_names):
        raise TrainingError(
            f"head {task!r} emits {out_dim} outputs but dataset has "
            f"{len(dataset.label_names)} labels"
        )
    n = len(dataset)
    if workers <= 1 or n < 2:
        per_label = _chunk_counts(model, dataset, task, threshold, 0, n)
    else:
        from concurrent.futures import ThreadPoolExecutor

        bounds = np.linspace(0, n, min(workers, n) + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_chunk_counts, model, dataset, task,
                                   threshold, int(a), int(b))
                       for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
            chunks = [f.result() for f in futures]
        per_label = chunks[0]
        for chunk in chunks[1:]:
            per_label = [acc + extra for acc, extra in zip(per_label, chunk)]
    reports = [
        M.LabelReport(name, M.ClassMetrics.from_counts(counts),
                      M.ClassMetrics.from_counts(counts.complemented()))
        for name, counts in zip(dataset.label_names, per_label)
    ]
    return M.EvaluationTable(
        model_id=model_id or model.arch_kind,
        dataset_flags=list(dataset_flags or model.task_names()),
        embedding_flags=list(embedding_flags or model.config.embedding_sources),
        reports=reports,
    )
