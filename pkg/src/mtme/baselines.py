"""Classical baselines: TF-IDF features with one-vs-rest logistic
regression and CART decision trees.

TF-IDF uses idf(t) = ln((1+N)/(1+df(t))) + 1 with raw term counts and
L2-normalized document vectors.  Logistic regression reuses the autodiff
core (sigmoid linear layer + BCE + Adam).  Trees are greedy CART on Gini
impurity with midpoint thresholds; tie-breaks go to the lowest feature
index, then the lowest threshold, so training is fully deterministic.
"""

from dataclasses import dataclass

import numpy as np

from . import data as D
from . import tensor as T
from .rng import Rng
from .tensor import Tensor
from .training import AdamState, adam_step


@dataclass
class TfidfModel:
    vocab: D.Vocabulary
    idf: np.ndarray  # aligned with feature indices (vocab index - 2)

    @property
    def n_features(self) -> int:
        return self.idf.shape[0]

    def transform_sparse(self, text: str) -> dict:
        counts = {}
        for token in D.tokenize(text):
            index = self.vocab.token_to_index.get(token)
            if index is not None:
                feature = index - 2
                counts[feature] = counts.get(feature, 0.0) + 1.0
        weighted = {f: c * self.idf[f] for f, c in counts.items()}
        norm = np.sqrt(sum(w * w for w in weighted.values()))
        if norm == 0.0:
            return {}
        return {f: w / norm for f, w in weighted.items()}

    def transform(self, texts) -> np.ndarray:
        out = np.zeros((len(texts), self.n_features), dtype=np.float64)
        for i, text in enumerate(texts):
            for feature, weight in self.transform_sparse(text).items():
                out[i, feature] = weight
        return out

    def transform_corpus(self, corpus: D.Corpus) -> np.ndarray:
        return self.transform([r.text for r in corpus.records])


def fit_tfidf(corpus: D.Corpus, max_features: int = 50_000) -> TfidfModel:
    if len(corpus) == 0:
        raise D.DataError("cannot fit TF-IDF on an empty corpus")
    vocab = D.build_vocab(corpus, min_freq=1, max_size=max_features)
    n_docs = len(corpus)
    df = np.zeros(len(vocab) - 2, dtype=np.float64)
    for record in corpus.records:
        seen = {vocab.token_to_index[t] - 2
                for t in set(D.tokenize(record.text)) if t in vocab.token_to_index}
        for feature in seen:
            df[feature] += 1
    idf = np.log((1.0 + n_docs) / (1.0 + df)) + 1.0
    return TfidfModel(vocab=vocab, idf=idf)


# ---------------------------------------------------------------------------
# logistic regression (one-vs-rest, trained with Adam + BCE)

@dataclass
class LogRegParams:
    W: np.ndarray  # n_features x n_labels
    b: np.ndarray  # n_labels


def train_logreg(features: np.ndarray, labels: np.ndarray, epochs: int = 50,
                 lr: float = 1e-3, seed: int = 0, batch_size: int = 64) -> LogRegParams:
    """Zero-initialized sigmoid linear classifiers, one per label column."""
    n, f = features.shape
    labels = labels.reshape(n, -1).astype(np.float64)
    k = labels.shape[1]
    w = Tensor(np.zeros((f, k)), requires_grad=True)
    b = Tensor(np.zeros(k), requires_grad=True)
    state = AdamState(lr=lr)
    rng = Rng(seed).stream("logreg")
    for _ in range(epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch_size):
            idx = order[start:start + batch_size]
            x = Tensor(features[idx])
            t = Tensor(labels[idx])
            with T.Tape() as tape:
                probs = T.sigmoid(T.matmul(x, w) + b)
                loss = T.bce_loss(probs, t)
            grads = T.backward(loss, tape)
            adam_step(
                {"w": w, "b": b},
                {"w": T.grad_for(grads, w, tape), "b": T.grad_for(grads, b, tape)},
                state,
            )
    return LogRegParams(W=w.data.copy(), b=b.data.copy())


def logreg_probs(model: LogRegParams, features: np.ndarray) -> np.ndarray:
    if features.shape[1] != model.W.shape[0]:
        raise ValueError(
            f"feature dim {features.shape[1]} != model dim {model.W.shape[0]}"
        )
    z = features @ model.W + model.b
    return np.where(z >= 0, 1.0 / (1.0 + np.exp(-z)), np.exp(z) / (1.0 + np.exp(z)))


# ---------------------------------------------------------------------------
# CART decision trees

@dataclass
class TreeNode:
    fraction: float          # positive fraction at this node
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode" = None
    right: "TreeNode" = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def gini_impurity(positives: int, total: int) -> float:
    if total == 0:
        return 0.0
    p = positives / total
    return 1.0 - p * p - (1.0 - p) * (1.0 - p)


def _best_split(x: np.ndarray, y: np.ndarray, min_leaf: int):
    """(feature, threshold, weighted child impurity) or None."""
    n = y.shape[0]
    best = None
    for feature in range(x.shape[1]):
        column = x[:, feature]
        order = np.argsort(column, kind="stable")
        sorted_vals = column[order]
        sorted_y = y[order]
        pos_prefix = np.cumsum(sorted_y)
        total_pos = pos_prefix[-1]
        # split after position i puts i+1 samples left
        boundaries = np.nonzero(sorted_vals[1:] > sorted_vals[:-1])[0]
        for i in boundaries:
            n_left = i + 1
            n_right = n - n_left
            if n_left < min_leaf or n_right < min_leaf:
                continue
            pos_left = pos_prefix[i]
            weighted = (
                n_left * gini_impurity(int(pos_left), n_left)
                + n_right * gini_impurity(int(total_pos - pos_left), n_right)
            ) / n
            threshold = (sorted_vals[i] + sorted_vals[i + 1]) / 2.0
            if best is None or weighted < best[2] - 1e-15:
                best = (feature, threshold, weighted)
    return best


def _grow(x, y, depth, max_depth, min_leaf) -> TreeNode:
    n = y.shape[0]
    positives = int(y.sum())
    node = TreeNode(fraction=positives / n)
    impurity = gini_impurity(positives, n)
    if impurity == 0.0 or depth >= max_depth or n < 2 * min_leaf:
        return node
    best = _best_split(x, y, min_leaf)
    if best is None or best[2] >= impurity:
        return node
    feature, threshold, _ = best
    mask = x[:, feature] <= threshold
    node.feature = feature
    node.threshold = threshold
    node.left = _grow(x[mask], y[mask], depth + 1, max_depth, min_leaf)
    node.right = _grow(x[~mask], y[~mask], depth + 1, max_depth, min_leaf)
    return node


def train_tree(features: np.ndarray, labels: np.ndarray, max_depth: int = 20,
               min_leaf: int = 5) -> TreeNode:
    if features.shape[0] == 0:
        raise ValueError("cannot train a tree on an empty dataset")
    return _grow(features, labels.astype(np.float64), 0, max_depth, min_leaf)


def train_trees(features: np.ndarray, labels: np.ndarray, max_depth: int = 20,
                min_leaf: int = 5) -> list:
    labels = labels.reshape(features.shape[0], -1)
    return [
        train_tree(features, labels[:, k], max_depth, min_leaf)
        for k in range(labels.shape[1])
    ]


def tree_fraction(node: TreeNode, row: np.ndarray) -> float:
    while not node.is_leaf:
        node = node.left if row[node.feature] <= node.threshold else node.right
    return node.fraction


def trees_probs(trees: list, features: np.ndarray) -> np.ndarray:
    out = np.zeros((features.shape[0], len(trees)), dtype=np.float64)
    for i in range(features.shape[0]):
        for k, tree in enumerate(trees):
            out[i, k] = tree_fraction(tree, features[i])
    return out


def predict_classical(model, features: np.ndarray, threshold: float = 0.5) -> np.ndarray:
    """Binary label matrix (ties at the threshold count positive)."""
    if isinstance(model, LogRegParams):
        probs = logreg_probs(model, features)
    elif isinstance(model, list):
        probs = trees_probs(model, features)
    else:
        raise TypeError(f"not a classical model: {type(model).__name__}")
    return (probs >= threshold).astype(np.uint8)
