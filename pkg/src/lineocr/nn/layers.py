"""Layer kernels with hand-written backward passes.

All kernels are batched: images are ``(N, H, W, C)`` and sequences are
``(N, T, D)``. A forward call returns ``(output, cache)``; the matching
backward call takes the upstream gradient and the cache, accumulates weight
gradients into the :class:`LayerParams` it was given and returns the gradient
with respect to the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class ShapeError(ValueError):
    """Raised when tensor extents are incompatible with a layer."""


@dataclass
class LayerParams:
    """Named weight tensors of one layer plus same-shaped gradient buffers."""

    name: str
    weights: dict[str, np.ndarray]
    grads: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if not self.grads:
            self.zero_grad()

    def zero_grad(self):
        self.grads = {k: np.zeros_like(w) for k, w in self.weights.items()}

    def astype(self, dtype) -> "LayerParams":
        return LayerParams(self.name, {k: w.astype(dtype) for k, w in self.weights.items()})


# -- convolution ---------------------------------------------------------------


def conv2d(x: np.ndarray, params: LayerParams):
    """3x3 convolution, stride 1, zero padding 1, followed by ReLU."""
    kernel = params.weights["kernel"]
    bias = params.weights["bias"]
    if x.ndim != 4:
        raise ShapeError(f"{params.name}: expected (N, H, W, C) input, got shape {x.shape}")
    n, h, w, c_in = x.shape
    if kernel.shape[:3] != (3, 3, c_in):
        raise ShapeError(
            f"{params.name}: kernel {kernel.shape} does not match {c_in} input channels"
        )
    c_out = kernel.shape[3]
    xp = np.pad(x, ((0, 0), (1, 1), (1, 1), (0, 0)))
    # patch layout (dy, dx, c) matches kernel.reshape(9 * c_in, c_out)
    patches = np.concatenate(
        [xp[:, dy : dy + h, dx : dx + w, :] for dy in range(3) for dx in range(3)], axis=-1
    )
    z = patches.reshape(-1, 9 * c_in) @ kernel.reshape(9 * c_in, c_out) + bias
    out = np.maximum(z, 0).reshape(n, h, w, c_out)
    return out, (patches, out, x.shape)


def conv2d_backward(dout: np.ndarray, cache, params: LayerParams, compute_dx: bool = True):
    patches, out, in_shape = cache
    n, h, w, c_in = in_shape
    kernel = params.weights["kernel"]
    c_out = kernel.shape[3]
    dz = np.where(out > 0, dout, 0).reshape(-1, c_out)
    params.grads["kernel"] += (patches.reshape(-1, 9 * c_in).T @ dz).reshape(kernel.shape)
    params.grads["bias"] += dz.sum(axis=0)
    if not compute_dx:
        return None
    dpatches = (dz @ kernel.reshape(9 * c_in, c_out).T).reshape(n, h, w, 9, c_in)
    dxp = np.zeros((n, h + 2, w + 2, c_in), dtype=dout.dtype)
    k = 0
    for dy in range(3):
        for dx in range(3):
            dxp[:, dy : dy + h, dx : dx + w, :] += dpatches[:, :, :, k, :]
            k += 1
    return dxp[:, 1:-1, 1:-1, :]


# -- pooling -------------------------------------------------------------------


def max_pool(x: np.ndarray, kh: int, kw: int):
    """Non-overlapping max pooling with window and stride ``kh x kw``.

    Trailing rows/columns that do not fill a window are dropped, so the output
    is ``(N, H // kh, W // kw, C)``. Ties route the gradient to the first
    maximal cell in row-major window order.
    """
    if kh not in (1, 2) or kw not in (1, 2):
        raise ShapeError(f"pool window must be 1 or 2 per axis, got {kh}x{kw}")
    n, h, w, c = x.shape
    ho, wo = h // kh, w // kw
    if ho < 1 or wo < 1:
        raise ShapeError(f"cannot pool {h}x{w} input with a {kh}x{kw} window")
    cells = [x[:, dy : ho * kh : kh, dx : wo * kw : kw, :] for dy in range(kh) for dx in range(kw)]
    out = cells[0].copy()
    for cell in cells[1:]:
        np.maximum(out, cell, out=out)
    winners = []
    taken = np.zeros(out.shape, dtype=bool)
    for cell in cells:
        hit = (cell == out) & ~taken
        taken |= hit
        winners.append(hit)
    return out, (winners, x.shape, kh, kw)


def max_pool_backward(dout: np.ndarray, cache) -> np.ndarray:
    winners, in_shape, kh, kw = cache
    ho, wo = dout.shape[1], dout.shape[2]
    dx = np.zeros(in_shape, dtype=dout.dtype)
    k = 0
    for dy in range(kh):
        for dxo in range(kw):
            dx[:, dy : ho * kh : kh, dxo : wo * kw : kw, :] = np.where(winners[k], dout, 0)
            k += 1
    return dx


# -- recurrent -----------------------------------------------------------------


def _sigmoid(z):
    return 0.5 * (np.tanh(0.5 * z) + 1.0)


def _lstm_direction(x, wx, wh, b):
    """Unidirectional LSTM over ``x`` of shape (N, T, D); gate order i, f, o, g."""
    n, t_len, _ = x.shape
    hid = wh.shape[0]
    xw = x @ wx + b
    h = np.zeros((n, hid), dtype=x.dtype)
    c = np.zeros((n, hid), dtype=x.dtype)
    acts = np.empty((t_len, n, 4 * hid), dtype=x.dtype)
    cs = np.empty((t_len + 1, n, hid), dtype=x.dtype)
    hs = np.empty((t_len + 1, n, hid), dtype=x.dtype)
    tcs = np.empty((t_len, n, hid), dtype=x.dtype)
    cs[0] = c
    hs[0] = h
    for t in range(t_len):
        z = xw[:, t] + h @ wh
        a = acts[t]
        a[:, : 3 * hid] = _sigmoid(z[:, : 3 * hid])
        a[:, 3 * hid :] = np.tanh(z[:, 3 * hid :])
        c = a[:, hid : 2 * hid] * c + a[:, :hid] * a[:, 3 * hid :]
        tc = np.tanh(c)
        h = a[:, 2 * hid : 3 * hid] * tc
        cs[t + 1] = c
        tcs[t] = tc
        hs[t + 1] = h
    return hs[1:].transpose(1, 0, 2), (x, acts, cs, hs, tcs)


def _lstm_direction_backward(dh_out, cache, wx, wh):
    x, acts, cs, hs, tcs = cache
    t_len, n, four_h = acts.shape
    hid = four_h // 4
    dz_all = np.empty((t_len, n, four_h), dtype=dh_out.dtype)
    dh_next = np.zeros((n, hid), dtype=dh_out.dtype)
    dc_next = np.zeros((n, hid), dtype=dh_out.dtype)
    for t in range(t_len - 1, -1, -1):
        a = acts[t]
        i, f, o, g = a[:, :hid], a[:, hid : 2 * hid], a[:, 2 * hid : 3 * hid], a[:, 3 * hid :]
        tc = tcs[t]
        dh = dh_out[:, t] + dh_next
        dc = dc_next + dh * o * (1.0 - tc * tc)
        dz = dz_all[t]
        dz[:, :hid] = dc * g * i * (1.0 - i)
        dz[:, hid : 2 * hid] = dc * cs[t] * f * (1.0 - f)
        dz[:, 2 * hid : 3 * hid] = dh * tc * o * (1.0 - o)
        dz[:, 3 * hid :] = dc * i * (1.0 - g * g)
        dc_next = dc * f
        dh_next = dz @ wh.T
    dz_flat = dz_all.transpose(1, 0, 2).reshape(-1, four_h)
    d_wx = x.reshape(-1, x.shape[-1]).T @ dz_flat
    d_wh = hs[:-1].transpose(1, 0, 2).reshape(-1, hid).T @ dz_flat
    d_b = dz_flat.sum(axis=0)
    dx = (dz_flat @ wx.T).reshape(x.shape)
    return dx, d_wx, d_wh, d_b


def _reverse_index(lengths: np.ndarray, t_len: int) -> np.ndarray:
    """Per-sample time reversal within each valid length; padding stays put."""
    t = np.arange(t_len)[None, :]
    lens = lengths[:, None]
    return np.where(t < lens, lens - 1 - t, t)


def bilstm(x: np.ndarray, params: LayerParams, lengths: np.ndarray | None = None):
    """Bidirectional LSTM; forward and backward hidden states are concatenated.

    ``lengths`` gives each sequence's valid extent. The reverse direction starts
    at each sequence's own last valid step, and outputs past the end are zero.
    """
    n, t_len, d = x.shape
    wx = params.weights["fw_wx"]
    if wx.shape[0] != d:
        raise ShapeError(f"{params.name}: input dim {d} does not match weights {wx.shape}")
    if lengths is None:
        lengths = np.full(n, t_len)
    lengths = np.asarray(lengths)
    rev = _reverse_index(lengths, t_len)
    rows = np.arange(n)[:, None]
    mask = (np.arange(t_len)[None, :] < lengths[:, None]).astype(x.dtype)[..., None]

    hf, cf = _lstm_direction(x, params.weights["fw_wx"], params.weights["fw_wh"], params.weights["fw_b"])
    hb_r, cb = _lstm_direction(
        x[rows, rev], params.weights["bw_wx"], params.weights["bw_wh"], params.weights["bw_b"]
    )
    hb = hb_r[rows, rev]
    out = np.concatenate([hf, hb], axis=-1) * mask
    return out, (cf, cb, rev, mask)


def bilstm_backward(dout: np.ndarray, cache, params: LayerParams) -> np.ndarray:
    cf, cb, rev, mask = cache
    n = dout.shape[0]
    hid = params.weights["fw_wh"].shape[0]
    rows = np.arange(n)[:, None]
    dout = dout * mask
    dx_f, *g_f = _lstm_direction_backward(
        np.ascontiguousarray(dout[..., :hid]), cf, params.weights["fw_wx"], params.weights["fw_wh"]
    )
    dx_br, *g_b = _lstm_direction_backward(
        dout[..., hid:][rows, rev], cb, params.weights["bw_wx"], params.weights["bw_wh"]
    )
    for prefix, grads in (("fw", g_f), ("bw", g_b)):
        for key, g in zip(("wx", "wh", "b"), grads):
            params.grads[f"{prefix}_{key}"] += g
    return dx_f + dx_br[rows, rev]


# -- output --------------------------------------------------------------------


def softmax(logits: np.ndarray) -> np.ndarray:
    z = logits - logits.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


def log_softmax(logits: np.ndarray) -> np.ndarray:
    z = logits - logits.max(axis=-1, keepdims=True)
    return z - np.log(np.exp(z).sum(axis=-1, keepdims=True))


def dense(x: np.ndarray, params: LayerParams):
    """Affine output map; the kernel holds one row per output class."""
    kernel = params.weights["kernel"]
    if kernel.shape[1] != x.shape[-1]:
        raise ShapeError(f"{params.name}: input dim {x.shape[-1]} != kernel {kernel.shape}")
    return x @ kernel.T + params.weights["bias"], x


def dense_backward(dlogits: np.ndarray, cache, params: LayerParams) -> np.ndarray:
    x = cache
    d = x.shape[-1]
    params.grads["kernel"] += dlogits.reshape(-1, dlogits.shape[-1]).T @ x.reshape(-1, d)
    params.grads["bias"] += dlogits.reshape(-1, dlogits.shape[-1]).sum(axis=0)
    return dlogits @ params.weights["kernel"]


def dense_softmax(x: np.ndarray, params: LayerParams):
    """Affine map followed by a row-wise softmax. Returns ``(probs, cache)``."""
    logits, cache = dense(x, params)
    return softmax(logits), (cache, logits)


def dense_softmax_backward(dlogits: np.ndarray, cache, params: LayerParams) -> np.ndarray:
    """Backward from the gradient w.r.t. the pre-softmax logits."""
    return dense_backward(dlogits, cache[0], params)


# -- dropout -------------------------------------------------------------------


def dropout(x: np.ndarray, rate: float, rng: np.random.Generator | None, training: bool = True):
    """Inverted dropout. Returns ``(output, mask)``; mask is None when inactive."""
    if not 0.0 <= rate < 1.0:
        raise ValueError(f"dropout rate must be in [0, 1), got {rate}")
    if not training or rate == 0.0:
        return x, None
    keep = rng.random(x.shape) >= rate
    mask = keep.astype(x.dtype) / x.dtype.type(1.0 - rate)
    return x * mask, mask


def dropout_backward(dout: np.ndarray, mask) -> np.ndarray:
    return dout if mask is None else dout * mask
