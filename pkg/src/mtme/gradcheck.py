"""Finite-difference verification scopes for every layer and the full
shared trunk, at fixed toy shapes with pinned seeds.

Each scope builds a small parameterized computation, wires a scalar loss
(a fixed random linear functional of the outputs, or BCE for the trunk),
and compares reverse-mode gradients against central differences for every
parameter entry.
"""

import numpy as np

from . import layers as L
from . import model as MD
from . import tensor as T
from .rng import Rng
from .tensor import Tensor

TOLERANCE = 1e-4

SCOPES = ("dense", "conv1d", "gru", "lstm", "bidir", "multitask")


def _weights_for(shape, rng) -> Tensor:
    return Tensor(rng.uniform(int(np.prod(shape)), -1.0, 1.0).reshape(shape))


def _weighted_sum(out: Tensor, weights: Tensor) -> Tensor:
    return T.reduce_sum(out * weights)


def _dense_scope(rng):
    p = L.dense_params(5, 4, "sigmoid", rng)
    x = Tensor(rng.uniform(15, -1, 1).reshape(3, 5))
    w = _weights_for((3, 4), rng)
    return lambda: _weighted_sum(L.dense_forward(x, p), w), [p.W, p.b]


def _conv1d_scope(rng):
    p = L.conv1d_params(4, 3, 2, rng)
    x = Tensor(rng.uniform(18, -1, 1).reshape(6, 3))
    w = _weights_for((5, 4), rng)
    return lambda: _weighted_sum(L.conv1d_forward(x, p), w), [p.kernels, p.bias]


def _gru_scope(rng):
    p = L.gru_params(3, 4, rng)
    x = Tensor(rng.uniform(15, -1, 1).reshape(5, 3))
    w = _weights_for((5, 4), rng)
    params = [getattr(p, f) for f in ("wz", "uz", "bz", "wr", "ur", "br", "wh", "uh", "bh")]
    return lambda: _weighted_sum(L.gru_forward(x, p), w), params


def _lstm_scope(rng):
    p = L.lstm_params(3, 4, rng)
    x = Tensor(rng.uniform(15, -1, 1).reshape(5, 3))
    w = _weights_for((5, 4), rng)
    fields = ("wi", "ui", "bi", "wf", "uf", "bf", "wo", "uo", "bo", "wg", "ug", "bg")
    return lambda: _weighted_sum(L.lstm_forward(x, p), w), [getattr(p, f) for f in fields]


def _bidir_scope(rng):
    fwd = L.gru_params(3, 3, rng)
    bwd = L.gru_params(3, 3, rng)
    x = Tensor(rng.uniform(12, -1, 1).reshape(4, 3))
    w = _weights_for((4, 6), rng)
    fields = ("wz", "uz", "bz", "wr", "ur", "br", "wh", "uh", "bh")
    params = [getattr(fwd, f) for f in fields] + [getattr(bwd, f) for f in fields]
    return lambda: _weighted_sum(L.bidirectional(x, fwd, bwd), w), params


def build_toy_multitask(rng, seq_len: int = 8, hidden: int = 4,
                        n_embeddings: int = 2) -> MD.ModelParams:
    vocab_size, dim, filters = 12, 3, 2
    tables = [L.random_table(vocab_size, dim, rng) for _ in range(n_embeddings)]
    cfg = MD.MultiTaskConfig(
        embedding_sources=[f"rand{i}" for i in range(n_embeddings)],
        tasks=[MD.TaskHead("main", 2), MD.TaskHead("aux", 1)],
        seq_len=seq_len,
        rnn_hidden=hidden,
        cnn_filters=filters,
        cnn_kernel=2,
        dropout_rate=0.0,
    )
    return MD.build_multitask(cfg, tables, rng)


def _multitask_scope(rng):
    model = build_toy_multitask(rng)
    seq_len = model.config.seq_len
    vocab_size = model.tables[0].vocab_size
    ids = np.array([[rng.below(vocab_size) for _ in range(seq_len)]])
    targets = Tensor(rng.uniform(2, 0.2, 0.8).reshape(1, 2))
    params = [model.params[n] for n in model.trunk_names()]
    params += [model.params[n] for n in model.head_names("main")]

    def forward():
        probs = MD.forward(model, ids, "main", training=False)
        return T.bce_loss(probs, targets)

    return forward, params


_BUILDERS = {
    "dense": _dense_scope,
    "conv1d": _conv1d_scope,
    "gru": _gru_scope,
    "lstm": _lstm_scope,
    "bidir": _bidir_scope,
    "multitask": _multitask_scope,
}


def run_scope(scope: str, seed: int = 1234) -> float:
    """Max relative error for one scope at its pinned toy shape."""
    forward_fn, params = _BUILDERS[scope](Rng(seed).stream(f"gradcheck.{scope}"))
    return T.grad_check(forward_fn, params)


def run_all(scopes=SCOPES, seed: int = 1234):
    """[(scope, max_rel_err, passed)] for the requested scopes."""
    results = []
    for scope in scopes:
        err = run_scope(scope, seed)
        results.append((scope, err, err <= TOLERANCE))
    return results
