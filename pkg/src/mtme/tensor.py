"""Dense float64 tensors with a recorded tape for reverse-mode gradients.

Recording model: a ``Tape`` is entered as a context manager.  While it is
active, every operation whose inputs carry gradient (a ``requires_grad`` leaf
or an intermediate already on the tape) appends one node.  Nodes are stored
in construction order, which is a topological order, so ``backward`` is a
single reverse sweep that visits each node exactly once.

Outside a tape, the same operations run value-only with no recording, which
is what inference and finite-difference probing use.  Tensors that are not
tape members are treated as immutable values.

Broadcasting is deliberately narrow: binary ops accept equal shapes, or a
second operand shaped like the last axis of the first (a bias vector).
"""

import math

import numpy as np

BCE_EPS = 1e-7

# op kind -> gradient scale factor; test hook for corrupting backward rules
# so gradient-check failure paths can be exercised.
_CORRUPTION: dict = {}


class ShapeError(ValueError):
    """Operand shapes incompatible with the requested operation."""


class DomainError(ValueError):
    """Operand values outside the operation's domain (e.g. log of <= 0)."""


class TapeError(RuntimeError):
    """Tape misuse: nested tapes, foreign tensors, non-scalar loss."""


def set_backward_corruption(op: str, factor: float) -> None:
    _CORRUPTION[op] = float(factor)


def clear_backward_corruption() -> None:
    _CORRUPTION.clear()


class Tensor:
    """n-dimensional float64 array, optionally tracked on a tape.

    ``node_id`` is only meaningful together with ``tape_serial``: a tensor
    belongs to the tape whose serial matches, which makes re-using parameters
    across training steps safe (each new tape re-registers them as leaves).
    """

    __slots__ = ("data", "requires_grad", "node_id", "tape_serial")

    def __init__(self, data, requires_grad: bool = False):
        arr = np.asarray(data, dtype=np.float64)
        if not arr.flags.c_contiguous:
            arr = np.ascontiguousarray(arr)
        self.data = arr
        self.requires_grad = bool(requires_grad)
        self.node_id = None
        self.tape_serial = None

    @property
    def shape(self) -> tuple:
        return self.data.shape

    @property
    def size(self) -> int:
        return self.data.size

    def item(self) -> float:
        if self.data.size != 1:
            raise ShapeError(f"item() on tensor of shape {self.shape}")
        return float(self.data.reshape(()))

    def copy_values(self) -> np.ndarray:
        return self.data.copy()

    def __repr__(self):
        return f"Tensor(shape={self.shape}, requires_grad={self.requires_grad})"

    def __add__(self, other):
        return apply_binary("add", self, other)

    def __sub__(self, other):
        return apply_binary("sub", self, other)

    def __mul__(self, other):
        return apply_binary("mul", self, other)

    def __matmul__(self, other):
        return matmul(self, other)


def zeros(shape) -> Tensor:
    return Tensor(np.zeros(shape, dtype=np.float64))


def ones(shape) -> Tensor:
    return Tensor(np.ones(shape, dtype=np.float64))


class _Node:
    __slots__ = ("op", "inputs", "backward_fn", "leaf_shape")

    def __init__(self, op, inputs, backward_fn, leaf_shape=None):
        self.op = op
        self.inputs = inputs
        self.backward_fn = backward_fn
        self.leaf_shape = leaf_shape


_active_tape = None
_tape_counter = 0


class Tape:
    """Append-only record of one forward computation."""

    def __init__(self):
        global _tape_counter
        _tape_counter += 1
        self.serial = _tape_counter
        self.nodes = []

    def __enter__(self):
        global _active_tape
        if _active_tape is not None:
            raise TapeError("a tape is already recording; tapes do not nest")
        _active_tape = self
        return self

    def __exit__(self, *exc):
        global _active_tape
        _active_tape = None
        return False

    def _append(self, node: _Node) -> int:
        self.nodes.append(node)
        return len(self.nodes) - 1

    def register_leaf(self, t: Tensor) -> int:
        if t.tape_serial == self.serial:
            return t.node_id
        t.node_id = self._append(_Node("leaf", (), None, leaf_shape=t.shape))
        t.tape_serial = self.serial
        return t.node_id

    def membership(self, t: Tensor):
        """Node id if t participates in this tape, else None."""
        if t.tape_serial == self.serial:
            return t.node_id
        if t.requires_grad:
            return self.register_leaf(t)
        return None


def _record(op: str, inputs, out_values: np.ndarray, backward_fn) -> Tensor:
    """Wrap op result; append a node when recording applies."""
    tape = _active_tape
    out = Tensor(out_values)
    if tape is None:
        return out
    ids = [tape.membership(t) for t in inputs]
    if all(i is None for i in ids):
        return out
    out.requires_grad = True
    out.node_id = tape._append(_Node(op, tuple(ids), backward_fn))
    out.tape_serial = tape.serial
    return out


def matmul(a: Tensor, b: Tensor) -> Tensor:
    if a.data.ndim != 2 or b.data.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul shapes incompatible: {a.shape} x {b.shape}")
    av, bv = a.data, b.data
    out = av @ bv

    def backward(g):
        return (g @ bv.T, av.T @ g)

    return _record("matmul", (a, b), out, backward)


def _sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def apply_unary(kind: str, a: Tensor) -> Tensor:
    av = a.data
    if kind == "sigmoid":
        out = _sigmoid(av)
        backward = lambda g: (g * out * (1.0 - out),)
    elif kind == "tanh":
        out = np.tanh(av)
        backward = lambda g: (g * (1.0 - out * out),)
    elif kind == "relu":
        out = np.maximum(av, 0.0)
        backward = lambda g: (g * (av > 0.0),)
    elif kind == "neg":
        out = -av
        backward = lambda g: (-g,)
    elif kind == "log":
        if np.any(av <= 0.0):
            idx = tuple(int(i) for i in np.argwhere(av <= 0.0)[0])
            raise DomainError(f"log of non-positive value at index {idx}")
        out = np.log(av)
        backward = lambda g: (g / av,)
    else:
        raise ValueError(f"unknown unary op {kind!r}")
    return _record(kind, (a,), out, backward)


def sigmoid(a):
    return apply_unary("sigmoid", a)


def tanh(a):
    return apply_unary("tanh", a)


def relu(a):
    return apply_unary("relu", a)


def _bias_broadcast(a_shape, b_shape) -> bool:
    return len(b_shape) == 1 and len(a_shape) >= 1 and b_shape[0] == a_shape[-1]


def apply_binary(kind: str, a: Tensor, b: Tensor) -> Tensor:
    av, bv = a.data, b.data
    if av.shape == bv.shape:
        reduce_b = None
    elif _bias_broadcast(av.shape, bv.shape):
        # bias vector over the trailing axis; gradient sums the leading axes
        reduce_b = tuple(range(av.ndim - 1))
    else:
        raise ShapeError(
            f"{kind} shapes incompatible: {av.shape} vs {bv.shape} "
            "(only equal shapes or a trailing-axis bias vector broadcast)"
        )

    def reduce_to_b(g):
        return g.sum(axis=reduce_b) if reduce_b is not None else g

    if kind == "add":
        out = av + bv
        backward = lambda g: (g, reduce_to_b(g))
    elif kind == "sub":
        out = av - bv
        backward = lambda g: (g, reduce_to_b(-g))
    elif kind == "mul":
        out = av * bv
        backward = lambda g: (g * bv, reduce_to_b(g * av))
    else:
        raise ValueError(f"unknown binary op {kind!r}")
    return _record(kind, (a, b), out, backward)


def concat(tensors, axis: int) -> Tensor:
    if not tensors:
        raise ShapeError("concat of an empty tensor list")
    first = tensors[0].shape
    ndim = len(first)
    if not 0 <= axis < ndim:
        raise ShapeError(f"concat axis {axis} out of range for rank {ndim}")
    for t in tensors[1:]:
        s = t.shape
        if len(s) != ndim or any(s[d] != first[d] for d in range(ndim) if d != axis):
            raise ShapeError(f"concat shapes differ off axis {axis}: {first} vs {s}")
    sizes = [t.shape[axis] for t in tensors]
    out = np.concatenate([t.data for t in tensors], axis=axis)
    offsets = np.cumsum([0] + sizes)

    def backward(g):
        return tuple(
            np.take(g, range(offsets[i], offsets[i + 1]), axis=axis)
            for i in range(len(sizes))
        )

    return _record("concat", tuple(tensors), out, backward)


def slice_axis(x: Tensor, axis: int, start: int, stop: int) -> Tensor:
    shape = x.shape
    if not 0 <= axis < len(shape):
        raise ShapeError(f"slice axis {axis} out of range for rank {len(shape)}")
    if not 0 <= start <= stop <= shape[axis]:
        raise ShapeError(f"slice [{start}:{stop}] outside axis of size {shape[axis]}")
    index = tuple(slice(None) if d != axis else slice(start, stop) for d in range(len(shape)))
    out = x.data[index].copy()

    def backward(g):
        full = np.zeros(shape, dtype=np.float64)
        full[index] = g
        return (full,)

    return _record("slice", (x,), out, backward)


def reshape(x: Tensor, new_shape) -> Tensor:
    new_shape = tuple(int(d) for d in new_shape)
    if math.prod(new_shape) != x.size:
        raise ShapeError(f"cannot reshape {x.shape} to {new_shape}")
    out = x.data.reshape(new_shape).copy()
    old_shape = x.shape

    def backward(g):
        return (g.reshape(old_shape),)

    return _record("reshape", (x,), out, backward)


def transpose2d(x: Tensor) -> Tensor:
    if x.data.ndim != 2:
        raise ShapeError(f"transpose2d needs rank 2, got shape {x.shape}")
    out = x.data.T.copy()

    def backward(g):
        return (g.T,)

    return _record("transpose", (x,), out, backward)


def pool_over_time(kind: str, x: Tensor) -> Tensor:
    """Max or mean over axis 0.  Max ties route gradient to the earliest step."""
    if x.data.ndim < 1 or x.shape[0] == 0:
        raise ShapeError("pool over an empty sequence")
    steps = x.shape[0]
    if kind == "max":
        arg = np.argmax(x.data, axis=0)  # first maximum wins
        out = np.take_along_axis(x.data, arg[None, ...], axis=0)[0]

        def backward(g):
            full = np.zeros(x.shape, dtype=np.float64)
            np.put_along_axis(full, arg[None, ...], g[None, ...], axis=0)
            return (full,)

    elif kind == "avg":
        out = x.data.mean(axis=0)

        def backward(g):
            return (np.broadcast_to(g / steps, x.shape).copy(),)

    else:
        raise ValueError(f"unknown pool kind {kind!r}")
    return _record(f"pool_{kind}", (x,), out, backward)


def reduce_sum(x: Tensor) -> Tensor:
    out = np.asarray(x.data.sum())

    def backward(g):
        return (np.broadcast_to(g, x.shape).copy(),)

    return _record("sum", (x,), out, backward)


def reduce_mean(x: Tensor) -> Tensor:
    n = x.size
    out = np.asarray(x.data.mean())

    def backward(g):
        return (np.broadcast_to(g / n, x.shape).copy(),)

    return _record("mean", (x,), out, backward)


def bce_loss(pred: Tensor, target: Tensor, mask: Tensor = None) -> Tensor:
    """Mean binary cross-entropy; predictions clamped to [eps, 1-eps]."""
    if pred.shape != target.shape:
        raise ShapeError(f"bce shapes differ: {pred.shape} vs {target.shape}")
    if mask is not None and mask.shape != pred.shape:
        raise ShapeError(f"bce mask shape {mask.shape} differs from {pred.shape}")
    p_raw = pred.data
    t = target.data
    p = np.clip(p_raw, BCE_EPS, 1.0 - BCE_EPS)
    elem = -(t * np.log(p) + (1.0 - t) * np.log(1.0 - p))
    if mask is not None:
        m = mask.data
        n = m.sum()
        if n == 0:
            raise ShapeError("bce mask excludes every element")
        out = np.asarray((elem * m).sum() / n)
    else:
        m = None
        n = p.size
        out = np.asarray(elem.mean())
    inside = (p_raw > BCE_EPS) & (p_raw < 1.0 - BCE_EPS)

    def backward(g):
        d = (-(t / p) + (1.0 - t) / (1.0 - p)) * inside / n
        if m is not None:
            d = d * m
        return (g * d,)

    return _record("bce", (pred,), out, backward)


def backward(loss: Tensor, tape: Tape) -> dict:
    """Reverse sweep; returns {leaf node_id: gradient Tensor}.

    Every requires_grad leaf registered on the tape appears in the map,
    with zeros when the loss does not depend on it.
    """
    if loss.data.shape != ():
        raise TapeError(f"loss must be scalar, got shape {loss.shape}")
    if loss.tape_serial != tape.serial or loss.node_id is None:
        raise TapeError("loss is not a node of this tape")
    grads = {loss.node_id: np.ones((), dtype=np.float64)}
    for nid in range(loss.node_id, -1, -1):
        g = grads.pop(nid, None)
        if g is None:
            continue
        node = tape.nodes[nid]
        if node.op == "leaf":
            grads[nid] = g  # keep: reported below
            continue
        contribs = node.backward_fn(g)
        factor = _CORRUPTION.get(node.op)
        for in_id, contrib in zip(node.inputs, contribs):
            if in_id is None:
                continue
            if factor is not None:
                contrib = contrib * factor
            if in_id in grads:
                grads[in_id] = grads[in_id] + contrib
            else:
                grads[in_id] = contrib
    result = {}
    for nid, node in enumerate(tape.nodes):
        if node.op == "leaf":
            g = grads.get(nid)
            if g is None:
                g = np.zeros(node.leaf_shape, dtype=np.float64)
            result[nid] = Tensor(np.broadcast_to(g, node.leaf_shape).copy())
    return result


def grad_for(grads: dict, t: Tensor, tape: Tape):
    """Gradient of t from a backward() map, or None if t never joined tape."""
    if t.tape_serial != tape.serial or t.node_id is None:
        return None
    return grads.get(t.node_id)


def grad_check(forward_fn, params, eps: float = 1e-5) -> float:
    """Max relative error between backward() and central differences.

    ``forward_fn`` must be deterministic and return a scalar Tensor; it is
    re-evaluated value-only (no tape) with each parameter entry nudged by
    +/- eps.  NaN anywhere is reported as an infinite error.
    """
    with Tape() as tape:
        loss = forward_fn()
    grads = backward(loss, tape)
    analytic = []
    for p in params:
        g = grad_for(grads, p, tape)
        analytic.append(np.zeros(p.shape) if g is None else g.data)

    worst = 0.0
    for p, ga in zip(params, analytic):
        flat = p.data.reshape(-1)
        gflat = ga.reshape(-1)
        for i in range(flat.size):
            saved = flat[i]
            flat[i] = saved + eps
            f_plus = float(forward_fn().data)
            flat[i] = saved - eps
            f_minus = float(forward_fn().data)
            flat[i] = saved
            numeric = (f_plus - f_minus) / (2.0 * eps)
            a = gflat[i]
            if not (np.isfinite(a) and np.isfinite(numeric)):
                return math.inf
            rel = abs(a - numeric) / max(abs(a), abs(numeric), 1e-8)
            if rel > worst:
                worst = rel
    return worst
