"""Dense numerical core: layer kernels, solver and the line-recognizer network."""

from .layers import (
    LayerParams,
    ShapeError,
    bilstm,
    conv2d,
    dense_softmax,
    dropout,
    log_softmax,
    max_pool,
    softmax,
)
from .network import ForwardResult, StateError, network_backward, network_forward, network_forward_batch
from .optim import AdamState, adam_step, clip_global_norm, global_norm

__all__ = [
    "AdamState",
    "ForwardResult",
    "LayerParams",
    "ShapeError",
    "StateError",
    "adam_step",
    "bilstm",
    "clip_global_norm",
    "conv2d",
    "dense_softmax",
    "dropout",
    "global_norm",
    "log_softmax",
    "max_pool",
    "network_backward",
    "network_forward",
    "network_forward_batch",
    "softmax",
]
