"""Gradient clipping and the Adam solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .layers import LayerParams


def global_norm(arrays: Iterable[np.ndarray]) -> float:
    return float(np.sqrt(sum(float(np.sum(np.square(a, dtype=np.float64))) for a in arrays)))


def clip_global_norm(grads: list[np.ndarray], max_norm: float) -> float:
    """Scale ``grads`` in place so their joint L2 norm is at most ``max_norm``.

    Returns the applied scale factor (1.0 when nothing was clipped).
    """
    if max_norm <= 0:
        raise ValueError(f"max_norm must be positive, got {max_norm}")
    norm = global_norm(grads)
    if norm <= max_norm or norm == 0.0:
        return 1.0
    scale = max_norm / norm
    for g in grads:
        g *= g.dtype.type(scale)
    return scale


@dataclass
class AdamState:
    lr: float = 0.001
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-7
    t: int = 0
    m: dict[str, np.ndarray] = field(default_factory=dict)
    v: dict[str, np.ndarray] = field(default_factory=dict)


def adam_step(params: list[LayerParams], state: AdamState) -> None:
    """One bias-corrected Adam update over every weight; zeroes gradients afterwards."""
    state.t += 1
    t = state.t
    b1, b2 = state.beta1, state.beta2
    c1, c2 = 1.0 - b1**t, 1.0 - b2**t
    for layer in params:
        for key, w in layer.weights.items():
            g = layer.grads[key]
            name = f"{layer.name}/{key}"
            if name not in state.m:
                state.m[name] = np.zeros_like(w)
                state.v[name] = np.zeros_like(w)
            m, v = state.m[name], state.v[name]
            m *= b1
            m += (1.0 - b1) * g
            v *= b2
            v += (1.0 - b2) * g * g
            update = state.lr * (m / c1) / (np.sqrt(v / c2) + state.eps)
            w -= update.astype(w.dtype, copy=False)
        layer.zero_grad()
