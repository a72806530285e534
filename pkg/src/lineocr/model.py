"""Model = network spec + codec + weights (+ the hyperparameters it was trained with)."""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

import numpy as np

from .codec import Codec
from .netspec import LSTM, Conv, MaxPool, NetworkSpec
from .nn.layers import LayerParams, ShapeError
from .preprocess import LINE_HEIGHT

FORGET_BIAS = 1.0


@dataclass
class Model:
    spec: NetworkSpec
    codec: Codec
    layers: list[LayerParams]
    hyper: dict = field(default_factory=dict)

    def layer(self, name: str) -> LayerParams:
        for p in self.layers:
            if p.name == name:
                return p
        raise KeyError(name)

    @property
    def dtype(self):
        return self.layers[0].weights[next(iter(self.layers[0].weights))].dtype

    def named_weights(self):
        """``(name, array)`` pairs in canonical order, e.g. ``conv0/kernel``."""
        for p in self.layers:
            for key, w in p.weights.items():
                yield f"{p.name}/{key}", w

    def copy(self) -> "Model":
        return Model(
            self.spec,
            self.codec,
            [LayerParams(p.name, {k: w.copy() for k, w in p.weights.items()}) for p in self.layers],
            copy.deepcopy(self.hyper),
        )

    def astype(self, dtype) -> "Model":
        return Model(self.spec, self.codec, [p.astype(dtype) for p in self.layers], copy.deepcopy(self.hyper))

    def zero_grad(self):
        for p in self.layers:
            p.zero_grad()


def glorot_uniform(rng, shape, fan_in, fan_out, dtype):
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape).astype(dtype)


def he_normal(rng, shape, fan_in, dtype):
    return rng.normal(0.0, np.sqrt(2.0 / fan_in), size=shape).astype(dtype)


def init_output_rows(rng, n_rows: int, fan_in: int, n_classes: int, dtype) -> np.ndarray:
    return glorot_uniform(rng, (n_rows, fan_in), fan_in, n_classes, dtype)


def layer_shapes(spec: NetworkSpec, n_classes: int, height: int = LINE_HEIGHT):
    """Expected weight shapes per layer name, in forward order."""
    shapes = {}
    c, h = 1, height
    n_conv = n_lstm = 0
    feat = None
    for layer in spec.layers:
        if isinstance(layer, Conv):
            shapes[f"conv{n_conv}"] = {"kernel": (3, 3, c, layer.filters), "bias": (layer.filters,)}
            c = layer.filters
            n_conv += 1
        elif isinstance(layer, MaxPool):
            h //= layer.kh
        elif isinstance(layer, LSTM):
            d = feat if feat is not None else h * c
            hid = layer.hidden
            shapes[f"lstm{n_lstm}"] = {
                f"{side}_{k}": s
                for side in ("fw", "bw")
                for k, s in (("wx", (d, 4 * hid)), ("wh", (hid, 4 * hid)), ("b", (4 * hid,)))
            }
            feat = 2 * hid
            n_lstm += 1
    d = feat if feat is not None else h * c
    shapes["output"] = {"kernel": (n_classes, d), "bias": (n_classes,)}
    return shapes


def init_model(spec: NetworkSpec, codec: Codec, seed: int = 0, dtype=np.float32, hyper=None) -> Model:
    """Freshly initialized weights.

    Conv kernels: He normal (std sqrt(2/fan_in), suited to the ReLU that
    follows). Output kernel: Glorot uniform. LSTM matrices: uniform in
    +-1/sqrt(fan_in), forget-gate bias 1, other biases 0.
    """
    dtype = np.dtype(dtype).type
    if spec.feature_height(LINE_HEIGHT) < 1:
        raise ShapeError(f"spec {spec.source!r} pools the {LINE_HEIGHT}px line below one row")
    rng = np.random.default_rng(seed)
    layers = []
    for name, shapes in layer_shapes(spec, len(codec)).items():
        w = {}
        if name.startswith("conv"):
            ks = shapes["kernel"]
            w["kernel"] = he_normal(rng, ks, 9 * ks[2], dtype)
            w["bias"] = np.zeros(shapes["bias"], dtype=dtype)
        elif name.startswith("lstm"):
            for side in ("fw", "bw"):
                d, four_h = shapes[f"{side}_wx"]
                hid = four_h // 4
                w[f"{side}_wx"] = rng.uniform(-1, 1, (d, four_h)).astype(dtype) / dtype(np.sqrt(d))
                w[f"{side}_wh"] = rng.uniform(-1, 1, (hid, four_h)).astype(dtype) / dtype(np.sqrt(hid))
                b = np.zeros(four_h, dtype=dtype)
                b[hid : 2 * hid] = FORGET_BIAS
                w[f"{side}_b"] = b
        else:
            n_cls, d = shapes["kernel"]
            w["kernel"] = init_output_rows(rng, n_cls, d, n_cls, dtype)
            w["bias"] = np.zeros(n_cls, dtype=dtype)
        layers.append(LayerParams(name, w))
    return Model(spec, codec, layers, dict(hyper or {}))
