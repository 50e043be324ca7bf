"""Neural layers: dense, 1-D convolution, GRU/LSTM cells, bidirectional
wrappers, frozen embedding lookup, dropout, glorot initialization.

Two calling surfaces exist for sequence layers.  The spec-level one takes a
single sequence as a ``Tensor[L x features]``.  The batched one, used by the
model forward pass, represents a sequence as a list of per-timestep
``Tensor[B x features]`` matrices so the recurrence vectorizes over the
batch.  Both run through the same cell code.
"""

from dataclasses import dataclass

import numpy as np

from . import tensor as T
from .rng import Rng
from .tensor import ShapeError, Tensor


class SequenceTooShortError(ShapeError):
    """Sequence shorter than the convolution kernel."""


def init_glorot(shape, rng: Rng) -> Tensor:
    """Uniform +/- sqrt(6/(fan_in+fan_out)) init for a 2-D weight matrix."""
    if len(shape) != 2:
        raise ShapeError(f"glorot init needs a 2-D shape, got {shape}")
    fan_in, fan_out = shape
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    values = rng.uniform(fan_in * fan_out, -limit, limit).reshape(shape)
    return Tensor(values, requires_grad=True)


def init_zeros(shape) -> Tensor:
    """Companion rule to init_glorot: biases and initial states start at zero."""
    return Tensor(np.zeros(shape), requires_grad=True)


# ---------------------------------------------------------------------------
# dense

@dataclass
class DenseParams:
    W: Tensor  # in x out
    b: Tensor  # out
    activation: str = "none"  # sigmoid | relu | none

    @property
    def out_dim(self) -> int:
        return self.W.shape[1]


def dense_params(in_dim: int, out_dim: int, activation: str, rng: Rng) -> DenseParams:
    if activation not in ("sigmoid", "relu", "none"):
        raise ValueError(f"unsupported dense activation {activation!r}")
    return DenseParams(init_glorot((in_dim, out_dim), rng), init_zeros((out_dim,)), activation)


def dense_forward(x: Tensor, p: DenseParams) -> Tensor:
    if x.data.ndim != 2 or x.shape[1] != p.W.shape[0]:
        raise ShapeError(f"dense input {x.shape} does not match weight {p.W.shape}")
    z = T.matmul(x, p.W) + p.b
    if p.activation == "sigmoid":
        return T.sigmoid(z)
    if p.activation == "relu":
        return T.relu(z)
    return z


# ---------------------------------------------------------------------------
# 1-D convolution (valid padding, ReLU)

@dataclass
class Conv1dParams:
    kernels: Tensor  # filters x in_channels x kernel_size
    bias: Tensor  # filters

    @property
    def filters(self) -> int:
        return self.kernels.shape[0]

    @property
    def in_channels(self) -> int:
        return self.kernels.shape[1]

    @property
    def kernel_size(self) -> int:
        return self.kernels.shape[2]


def conv1d_params(filters: int, in_channels: int, kernel_size: int, rng: Rng) -> Conv1dParams:
    flat = init_glorot((in_channels * kernel_size, filters), rng)
    kernels = Tensor(
        flat.data.T.reshape(filters, in_channels, kernel_size).copy(),
        requires_grad=True,
    )
    return Conv1dParams(kernels, init_zeros((filters,)))


def _kernel_tap_matrices(p: Conv1dParams):
    """Per-offset (in_channels x filters) views of the kernel tensor."""
    f, c, k = p.kernels.shape
    taps = []
    for j in range(k):
        tap = T.slice_axis(p.kernels, 2, j, j + 1)  # f x c x 1
        taps.append(T.transpose2d(T.reshape(tap, (f, c))))  # c x f
    return taps


def conv1d_steps(steps, p: Conv1dParams):
    """Valid cross-correlation + bias + ReLU over per-timestep matrices."""
    k = p.kernel_size
    if len(steps) < k:
        raise SequenceTooShortError(
            f"sequence of {len(steps)} steps shorter than kernel size {k}"
        )
    if steps[0].shape[-1] != p.in_channels:
        raise ShapeError(
            f"conv input channels {steps[0].shape[-1]} != kernel channels {p.in_channels}"
        )
    taps = _kernel_tap_matrices(p)
    out = []
    for t in range(len(steps) - k + 1):
        acc = T.matmul(steps[t], taps[0])
        for j in range(1, k):
            acc = acc + T.matmul(steps[t + j], taps[j])
        out.append(T.relu(acc + p.bias))
    return out


def conv1d_forward(x: Tensor, p: Conv1dParams) -> Tensor:
    if x.data.ndim != 2:
        raise ShapeError(f"conv1d input must be L x C, got {x.shape}")
    steps = [T.slice_axis(x, 0, t, t + 1) for t in range(x.shape[0])]
    return T.concat(conv1d_steps(steps, p), axis=0)


# ---------------------------------------------------------------------------
# recurrent cells

@dataclass
class GruParams:
    wz: Tensor
    uz: Tensor
    bz: Tensor
    wr: Tensor
    ur: Tensor
    br: Tensor
    wh: Tensor
    uh: Tensor
    bh: Tensor

    @property
    def hidden_size(self) -> int:
        return self.uz.shape[0]

    @property
    def input_size(self) -> int:
        return self.wz.shape[0]


def gru_params(input_size: int, hidden_size: int, rng: Rng) -> GruParams:
    def w():
        return init_glorot((input_size, hidden_size), rng)

    def u():
        return init_glorot((hidden_size, hidden_size), rng)

    def b():
        return init_zeros((hidden_size,))

    return GruParams(w(), u(), b(), w(), u(), b(), w(), u(), b())


def gru_cell(x: Tensor, h: Tensor, p: GruParams) -> Tensor:
    """z = s(Wz x + Uz h + bz); r = s(Wr x + Ur h + br);
    h~ = tanh(Wh x + Uh (r*h) + bh); h' = (1-z)*h + z*h~."""
    z = T.sigmoid(T.matmul(x, p.wz) + T.matmul(h, p.uz) + p.bz)
    r = T.sigmoid(T.matmul(x, p.wr) + T.matmul(h, p.ur) + p.br)
    h_cand = T.tanh(T.matmul(x, p.wh) + T.matmul(r * h, p.uh) + p.bh)
    keep = T.ones(z.shape) - z
    return keep * h + z * h_cand


@dataclass
class LstmParams:
    wi: Tensor
    ui: Tensor
    bi: Tensor
    wf: Tensor
    uf: Tensor
    bf: Tensor
    wo: Tensor
    uo: Tensor
    bo: Tensor
    wg: Tensor
    ug: Tensor
    bg: Tensor

    @property
    def hidden_size(self) -> int:
        return self.ui.shape[0]

    @property
    def input_size(self) -> int:
        return self.wi.shape[0]


def lstm_params(input_size: int, hidden_size: int, rng: Rng) -> LstmParams:
    def w():
        return init_glorot((input_size, hidden_size), rng)

    def u():
        return init_glorot((hidden_size, hidden_size), rng)

    def b():
        return init_zeros((hidden_size,))

    return LstmParams(w(), u(), b(), w(), u(), b(), w(), u(), b(), w(), u(), b())


def lstm_cell(x: Tensor, h: Tensor, c: Tensor, p: LstmParams):
    """Standard gates: c' = f*c + i*g, h' = o*tanh(c')."""
    i = T.sigmoid(T.matmul(x, p.wi) + T.matmul(h, p.ui) + p.bi)
    f = T.sigmoid(T.matmul(x, p.wf) + T.matmul(h, p.uf) + p.bf)
    o = T.sigmoid(T.matmul(x, p.wo) + T.matmul(h, p.uo) + p.bo)
    g = T.tanh(T.matmul(x, p.wg) + T.matmul(h, p.ug) + p.bg)
    c_new = f * c + i * g
    return o * T.tanh(c_new), c_new


def run_rnn_steps(params, steps, h0: Tensor = None):
    """Hidden state per timestep for a GRU or LSTM over step matrices."""
    if not steps:
        raise ShapeError("empty input sequence")
    batch = steps[0].shape[0]
    hidden = params.hidden_size
    h = h0 if h0 is not None else T.zeros((batch, hidden))
    out = []
    if isinstance(params, GruParams):
        for x in steps:
            h = gru_cell(x, h, params)
            out.append(h)
    elif isinstance(params, LstmParams):
        c = T.zeros((batch, hidden))
        for x in steps:
            h, c = lstm_cell(x, h, c, params)
            out.append(h)
    else:
        raise TypeError(f"not an RNN parameter set: {type(params).__name__}")
    return out


def _rows(x: Tensor):
    return [T.slice_axis(x, 0, t, t + 1) for t in range(x.shape[0])]


def gru_forward(x: Tensor, p: GruParams, h0: Tensor = None) -> Tensor:
    if x.shape[1] != p.input_size:
        raise ShapeError(f"gru input {x.shape} does not match input size {p.input_size}")
    h0m = T.reshape(h0, (1, p.hidden_size)) if h0 is not None else None
    return T.concat(run_rnn_steps(p, _rows(x), h0m), axis=0)


def lstm_forward(x: Tensor, p: LstmParams, h0: Tensor = None, c0: Tensor = None) -> Tensor:
    if x.shape[1] != p.input_size:
        raise ShapeError(f"lstm input {x.shape} does not match input size {p.input_size}")
    if not (h0 is None and c0 is None):
        # explicit initial state: unroll manually so c0 participates
        h = T.reshape(h0, (1, p.hidden_size)) if h0 is not None else T.zeros((1, p.hidden_size))
        c = T.reshape(c0, (1, p.hidden_size)) if c0 is not None else T.zeros((1, p.hidden_size))
        out = []
        for step in _rows(x):
            h, c = lstm_cell(step, h, c, p)
            out.append(h)
        return T.concat(out, axis=0)
    return T.concat(run_rnn_steps(p, _rows(x)), axis=0)


def bidirectional_steps(steps, fwd, bwd):
    """Per-timestep concat of forward and re-reversed backward passes.

    Channels [0, hidden) hold the forward direction.
    """
    if fwd.hidden_size != bwd.hidden_size:
        raise ShapeError(
            f"bidirectional hidden sizes differ: {fwd.hidden_size} vs {bwd.hidden_size}"
        )
    f_out = run_rnn_steps(fwd, steps)
    b_out = run_rnn_steps(bwd, list(reversed(steps)))
    b_out.reverse()
    return [T.concat([f, b], axis=1) for f, b in zip(f_out, b_out)]


def bidirectional(x: Tensor, fwd, bwd) -> Tensor:
    return T.concat(bidirectional_steps(_rows(x), fwd, bwd), axis=0)


# ---------------------------------------------------------------------------
# embeddings

class EmbeddingTable:
    """Frozen vocabulary-aligned vectors; rows 0 (padding) and 1 (OOV) are zero."""

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] < 2:
            raise ShapeError(f"embedding matrix must be V x dim with V >= 2, got {m.shape}")
        if np.any(m[0] != 0.0) or np.any(m[1] != 0.0):
            raise ValueError("embedding rows 0 (padding) and 1 (OOV) must be zero")
        self.matrix = Tensor(m, requires_grad=False)

    @property
    def vocab_size(self) -> int:
        return self.matrix.shape[0]

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]


def random_table(vocab_size: int, dim: int, rng: Rng, scale: float = 0.5) -> EmbeddingTable:
    m = rng.uniform(vocab_size * dim, -scale, scale).reshape(vocab_size, dim)
    m[0] = 0.0
    m[1] = 0.0
    return EmbeddingTable(m)


def _check_ids(ids: np.ndarray, table: EmbeddingTable) -> np.ndarray:
    ids = np.asarray(ids)
    if ids.size and (ids.min() < 0 or ids.max() >= table.vocab_size):
        bad = ids[(ids < 0) | (ids >= table.vocab_size)][0]
        raise IndexError(f"token id {int(bad)} outside vocabulary of size {table.vocab_size}")
    return ids


def embed(ids, table: EmbeddingTable) -> Tensor:
    """Row lookup for a 1-D id sequence; the table receives no gradient."""
    ids = _check_ids(ids, table)
    return Tensor(table.matrix.data[ids])


def embed_steps(ids, table: EmbeddingTable):
    """Per-timestep (B x dim) lookups for a B x L id batch."""
    ids = _check_ids(ids, table)
    return [Tensor(table.matrix.data[ids[:, t]]) for t in range(ids.shape[1])]


# ---------------------------------------------------------------------------
# dropout

@dataclass
class SpatialDropoutCfg:
    rate: float = 0.2

    def __post_init__(self):
        if not 0.0 <= self.rate < 1.0:
            raise ValueError(f"dropout rate must be in [0, 1), got {self.rate}")


def _keep_mask(shape, rate: float, rng: Rng) -> np.ndarray:
    u = rng.uniform(int(np.prod(shape))).reshape(shape)
    return (u >= rate) / (1.0 - rate)


def spatial_dropout(x: Tensor, cfg: SpatialDropoutCfg, rng: Rng, training: bool) -> Tensor:
    """Zero whole channels across all timesteps; survivors scaled by 1/(1-rate)."""
    if not training or cfg.rate == 0.0:
        return x
    mask = _keep_mask((x.shape[-1],), cfg.rate, rng)
    return x * Tensor(mask)


def spatial_dropout_steps(steps, rate: float, rng: Rng, training: bool):
    """Batched spatial dropout: one channel mask per sample, shared over time."""
    if not training or rate == 0.0:
        return steps
    mask = Tensor(_keep_mask(steps[0].shape, rate, rng))
    return [s * mask for s in steps]


def dropout_steps(steps, rate: float, rng: Rng, training: bool):
    """Ordinary elementwise dropout, fresh mask each timestep."""
    if not training or rate == 0.0:
        return steps
    return [s * Tensor(_keep_mask(s.shape, rate, rng)) for s in steps]
