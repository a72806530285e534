"""Single-model prediction, extended per-character output and confidence voting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .codec import Codec
from .ctc import greedy_decode
from .model import Model
from .nn.network import network_forward_batch
from .preprocess import LineImage


class EnsembleError(ValueError):
    pass


@dataclass
class CharInfo:
    char: str
    confidence: float
    start_t: int
    end_t: int
    start_px: float
    end_px: float


@dataclass
class Prediction:
    text: str
    chars: list[CharInfo] = field(default_factory=list)
    probs: np.ndarray | None = None
    codec: Codec | None = None

    def to_record(self) -> dict:
        """Extended record: text, then (char, confidence, start_px, end_px) per character."""
        return {
            "text": self.text,
            "chars": [[c.char, round(c.confidence, 6), round(c.start_px, 2), round(c.end_px, 2)] for c in self.chars],
        }


def decode_matrix(probs: np.ndarray, codec: Codec, line: LineImage | None, downsample: int, extended: bool) -> Prediction:
    dec = greedy_decode(probs)
    text = codec.decode(dec.labels)
    if not extended:
        return Prediction(text)
    chars = []
    for k, (t0, t1), conf in zip(dec.labels, dec.positions, dec.confidences):
        x0, x1 = t0 * downsample, t1 * downsample
        if line is not None:
            x0, x1 = line.to_original_x(x0), line.to_original_x(x1)
        chars.append(CharInfo(codec.decode([k]), conf, t0, t1, float(x0), float(x1)))
    return Prediction(text, chars, probs, codec)


def prob_matrices(model: Model, lines: Sequence[LineImage], batch_size: int = 16) -> list[np.ndarray]:
    """Probability matrices for many lines, batched by similar width."""
    out: list[np.ndarray | None] = [None] * len(lines)
    order = sorted(range(len(lines)), key=lambda i: lines[i].width)
    for s in range(0, len(order), batch_size):
        idx = order[s : s + batch_size]
        res = network_forward_batch(model, [lines[i].pixels for i in idx], training=False)
        for j, i in enumerate(idx):
            out[i] = res.probs(j)
    return out


def predict_line(model: Model, line: LineImage, extended: bool = False) -> Prediction:
    probs = prob_matrices(model, [line])[0]
    return decode_matrix(probs, model.codec, line, model.spec.x_downsample, extended)


def predict_lines(model: Model, lines: Sequence[LineImage], extended: bool = False) -> list[Prediction]:
    ds = model.spec.x_downsample
    return [
        decode_matrix(p, model.codec, line, ds, extended)
        for p, line in zip(prob_matrices(model, lines), lines)
    ]


def predict_texts(model: Model, lines: Sequence[LineImage]) -> list[str]:
    return [p.text for p in predict_lines(model, lines)]


# -- voting --------------------------------------------------------------------


class Ensemble:
    """Voters sharing a horizontal downsampling, mapped onto a union codec."""

    def __init__(self, models: Sequence[Model]):
        if not models:
            raise EnsembleError("an ensemble needs at least one model")
        factors = {m.spec.x_downsample for m in models}
        if len(factors) != 1:
            raise EnsembleError(f"voters downsample the width differently: {sorted(factors)}")
        self.models = list(models)
        self.downsample = factors.pop()
        chars = sorted(set().union(*(m.codec.chars for m in models)))
        self.codec = Codec(tuple(chars))
        # column j of a voter's matrix lands in column remap[j] of the union matrix
        self.remaps = [
            np.array([0] + [self.codec.index(c) for c in m.codec.chars]) for m in self.models
        ]

    def __len__(self):
        return len(self.models)


def vote_matrices(matrices: Sequence[np.ndarray], remaps: Sequence[np.ndarray], n_classes: int) -> np.ndarray:
    """Average voter matrices in the union codec; absent characters contribute 0."""
    lengths = {m.shape[0] for m in matrices}
    if len(lengths) != 1:
        raise EnsembleError(f"voters produced different sequence lengths: {sorted(lengths)}")
    total = np.zeros((lengths.pop(), n_classes), dtype=np.float64)
    for m, remap in zip(matrices, remaps):
        total[:, remap] += m
    return total / len(matrices)


def vote_confidence(ensemble: Ensemble, line: LineImage, extended: bool = False) -> Prediction:
    if len(ensemble) == 1:
        return predict_line(ensemble.models[0], line, extended)
    mats = [prob_matrices(m, [line])[0] for m in ensemble.models]
    avg = vote_matrices(mats, ensemble.remaps, len(ensemble.codec))
    return decode_matrix(avg, ensemble.codec, line, ensemble.downsample, extended)


def vote_lines(ensemble: Ensemble, lines: Sequence[LineImage], extended: bool = False) -> list[Prediction]:
    if len(ensemble) == 1:
        return predict_lines(ensemble.models[0], lines, extended)
    per_model = [prob_matrices(m, lines) for m in ensemble.models]
    out = []
    for i, line in enumerate(lines):
        avg = vote_matrices([pm[i] for pm in per_model], ensemble.remaps, len(ensemble.codec))
        out.append(decode_matrix(avg, ensemble.codec, line, ensemble.downsample, extended))
    return out
