"""Forward and backward passes of a CNN-BiLSTM line recognizer.

Lines of different widths are batched by right-padding with background.
After every convolution and pooling stage, columns beyond a line's own valid
width are zeroed, so each line's outputs match what it would produce alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..netspec import LSTM, Conv, MaxPool
from . import layers as L

DEFAULT_DROPOUT = 0.5


class StateError(RuntimeError):
    pass


@dataclass
class ForwardResult:
    logits: np.ndarray  # (N, T, L)
    lengths: np.ndarray  # valid timesteps per line
    cache: list | None

    def log_probs(self, i: int) -> np.ndarray:
        return L.log_softmax(self.logits[i, : self.lengths[i]].astype(np.float64))

    def probs(self, i: int) -> np.ndarray:
        return L.softmax(self.logits[i, : self.lengths[i]])


def batch_images(images: Sequence[np.ndarray], dtype=np.float32):
    """Stack ``(H, W_i)`` images into ``(N, H, W_max, 1)`` plus the widths."""
    heights = {im.shape[0] for im in images}
    if len(heights) != 1:
        raise L.ShapeError(f"lines in a batch must share a height, got {sorted(heights)}")
    widths = np.array([im.shape[1] for im in images])
    batch = np.zeros((len(images), heights.pop(), widths.max(), 1), dtype=dtype)
    for i, im in enumerate(images):
        batch[i, :, : im.shape[1], 0] = im
    return batch, widths


def _column_mask(widths, w_max, dtype):
    return (np.arange(w_max)[None, :] < widths[:, None]).astype(dtype)[:, None, :, None]


def network_forward_batch(
    model,
    images: Sequence[np.ndarray],
    training: bool = False,
    rng: np.random.Generator | None = None,
    dropout: float | None = None,
    keep_cache: bool | None = None,
) -> ForwardResult:
    dtype = model.dtype
    x, widths = batch_images(images, dtype)
    if keep_cache is None:
        keep_cache = training
    if dropout is None:
        dropout = model.hyper.get("dropout", DEFAULT_DROPOUT)
    cache = []
    params = iter(model.layers)
    n_lstm = sum(isinstance(s, LSTM) for s in model.spec.layers)
    seen_lstm = 0
    seq = None
    for spec in model.spec.layers:
        if isinstance(spec, Conv):
            p = next(params)
            x, c = L.conv2d(x, p)
            mask = _column_mask(widths, x.shape[2], dtype)
            x = x * mask
            cache.append(("conv", p, c, mask))
        elif isinstance(spec, MaxPool):
            if x.shape[1] // spec.kh < 1:
                raise L.ShapeError(f"pooling reduces the line height {x.shape[1]} below one row")
            x, c = L.max_pool(x, spec.kh, spec.kw)
            widths = widths // spec.kw
            mask = _column_mask(widths, x.shape[2], dtype)
            x = x * mask
            cache.append(("pool", None, c, mask))
        else:
            if seq is None:
                seq = _to_sequence(x)
                cache.append(("bridge", None, x.shape, None))
            p = next(params)
            seq, c = L.bilstm(seq, p, widths)
            cache.append(("lstm", p, c, None))
            seen_lstm += 1
            if seen_lstm == n_lstm:
                seq, dmask = L.dropout(seq, dropout, rng, training)
                cache.append(("dropout", None, dmask, None))
    if seq is None:
        seq = _to_sequence(x)
        cache.append(("bridge", None, x.shape, None))
    p = next(params)
    logits, c = L.dense(seq, p)
    cache.append(("dense", p, c, None))
    return ForwardResult(logits, widths, cache if keep_cache else None)


def _to_sequence(x):
    """(N, H, W, C) feature map -> (N, W, H*C): width is the time axis."""
    n, h, w, c = x.shape
    return np.ascontiguousarray(x.transpose(0, 2, 1, 3)).reshape(n, w, h * c)


def network_backward(dlogits: np.ndarray, result: ForwardResult) -> None:
    """Accumulate weight gradients for the batch into the model's LayerParams."""
    if result.cache is None:
        raise StateError("backward needs a forward pass run with keep_cache=True")
    g = dlogits
    first_conv = next((i for i, e in enumerate(result.cache) if e[0] == "conv"), None)
    for i in range(len(result.cache) - 1, -1, -1):
        kind, p, c, mask = result.cache[i]
        if kind == "dense":
            g = L.dense_backward(g, c, p)
        elif kind == "dropout":
            g = L.dropout_backward(g, c)
        elif kind == "lstm":
            g = L.bilstm_backward(g, c, p)
        elif kind == "bridge":
            n, h, w, ch = c
            g = g.reshape(n, w, h, ch).transpose(0, 2, 1, 3)
        elif kind == "pool":
            g = L.max_pool_backward(g * mask, c)
        elif kind == "conv":
            g = L.conv2d_backward(g * mask, c, p, compute_dx=i != first_conv)
            if g is None:
                break


def network_forward(line, model, training: bool = False, rng=None) -> np.ndarray:
    """Probability matrix ``(T, L)`` for a single preprocessed line."""
    pixels = getattr(line, "pixels", line)
    res = network_forward_batch(model, [pixels], training=training, rng=rng, keep_cache=False)
    return res.probs(0)
