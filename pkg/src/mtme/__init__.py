"""mtme: multi-task multi-embedding text classification toolkit.

A self-contained reverse-mode autodiff tensor core, recurrent/convolutional
text classifiers with hard parameter sharing across tasks, classical TF-IDF
baselines, dataset analysis, and a comparison-table report path.
"""

__version__ = "0.1.0"

from .tensor import Tensor, Tape, backward, grad_check  # noqa: F401
from .rng import Rng  # noqa: F401
