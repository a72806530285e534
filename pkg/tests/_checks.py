"""Finite-difference gradient checks shared by the unit and acceptance tests."""

from __future__ import annotations

import numpy as np

from lineocr.ctc import ctc_loss_from_log_probs
from lineocr.nn import layers as L

H = 1e-6
# guards 0/0 when analytic and numeric gradients are both (near) zero
REL_FLOOR = 1e-8


def rel_error(analytic: float, numeric: float) -> float:
    return abs(analytic - numeric) / max(abs(analytic), abs(numeric), REL_FLOOR)


def numeric_grad(f, arr: np.ndarray, idx, h: float = H) -> float:
    old = arr[idx]
    arr[idx] = old + h
    fp = f()
    arr[idx] = old - h
    fm = f()
    arr[idx] = old
    return (fp - fm) / (2 * h)


def sample_indices(rng, shape, n):
    flat = rng.choice(int(np.prod(shape)), size=min(n, int(np.prod(shape))), replace=False)
    return [np.unravel_index(i, shape) for i in flat]


def check_array(f, arr, analytic, rng, n=20) -> float:
    """Worst relative error over ``n`` sampled entries of ``arr``."""
    return max(rel_error(float(analytic[i]), numeric_grad(f, arr, i)) for i in sample_indices(rng, arr.shape, n))


def _params(rng, name, shapes, scale=0.5):
    return L.LayerParams(name, {k: rng.normal(0, scale, s) for k, s in shapes.items()})


def conv_check(seed: int, n: int = 20) -> float:
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(2, 5, 6, 3))
    p = _params(rng, "conv", {"kernel": (3, 3, 3, 4), "bias": (4,)})
    r = rng.normal(size=(2, 5, 6, 4))

    def f():
        return float(np.sum(L.conv2d(x, p)[0] * r))

    out, cache = L.conv2d(x, p)
    p.zero_grad()
    dx = L.conv2d_backward(r, cache, p)
    return max(
        check_array(f, p.weights["kernel"], p.grads["kernel"], rng, n),
        check_array(f, p.weights["bias"], p.grads["bias"], rng, 4),
        check_array(f, x, dx, rng, n),
    )


def pool_check(seed: int, n: int = 20) -> float:
    """Pooling has no weights; the sampled entries are input cells."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for kh, kw in ((2, 2), (1, 2), (2, 1)):
        x = rng.normal(size=(2, 5, 7, 3))
        _, cache = L.max_pool(x, kh, kw)
        r = rng.normal(size=(2, 5 // kh, 7 // kw, 3))

        def f():
            return float(np.sum(L.max_pool(x, kh, kw)[0] * r))

        dx = L.max_pool_backward(r, cache)
        worst = max(worst, check_array(f, x, dx, rng, n))
    return worst


def bilstm_check(seed: int, n: int = 20) -> float:
    rng = np.random.default_rng(seed)
    d, hid, t_len = 4, 3, 5
    shapes = {}
    for side in ("fw", "bw"):
        shapes.update({f"{side}_wx": (d, 4 * hid), f"{side}_wh": (hid, 4 * hid), f"{side}_b": (4 * hid,)})
    p = _params(rng, "lstm", shapes)
    x = rng.normal(size=(3, t_len, d))
    lengths = np.array([5, 3, 4])
    r = rng.normal(size=(3, t_len, 2 * hid))

    def f():
        return float(np.sum(L.bilstm(x, p, lengths)[0] * r))

    _, cache = L.bilstm(x, p, lengths)
    p.zero_grad()
    dx = L.bilstm_backward(r, cache, p)
    worst = check_array(f, x, dx, rng, n)
    for key in shapes:
        worst = max(worst, check_array(f, p.weights[key], p.grads[key], rng, n))
    return worst


def dense_softmax_check(seed: int, n: int = 20) -> float:
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(2, 4, 6))
    p = _params(rng, "output", {"kernel": (5, 6), "bias": (5,)})
    target = rng.integers(0, 5, size=(2, 4))
    onehot = np.eye(5)[target]

    def f():
        probs = L.dense_softmax(x, p)[0]
        return float(-np.sum(onehot * np.log(probs)))

    probs, cache = L.dense_softmax(x, p)
    p.zero_grad()
    dx = L.dense_softmax_backward(probs - onehot, cache, p)
    return max(
        check_array(f, p.weights["kernel"], p.grads["kernel"], rng, n),
        check_array(f, p.weights["bias"], p.grads["bias"], rng, 5),
        check_array(f, x, dx, rng, n),
    )


def ctc_check(seed: int) -> float:
    """Every logit of a random (T, L) instance against central differences."""
    rng = np.random.default_rng(seed)
    t_len = int(rng.integers(3, 9))
    n_cls = int(rng.integers(2, 6))
    tgt_len = int(rng.integers(1, max(2, t_len // 2 + 1)))
    target = list(rng.integers(1, n_cls, size=tgt_len))
    logits = rng.normal(size=(t_len, n_cls))

    def f():
        return ctc_loss_from_log_probs(L.log_softmax(logits), target)[0]

    _, grad = ctc_loss_from_log_probs(L.log_softmax(logits), target)
    return max(
        rel_error(grad[i], numeric_grad(f, logits, i)) for i in np.ndindex(logits.shape)
    )
