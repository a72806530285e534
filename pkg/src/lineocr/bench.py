"""CPU throughput measurement for prediction and training steps."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .ctc import ctc_loss_from_log_probs
from .model import Model
from .netspec import min_width_check
from .nn.network import network_backward, network_forward_batch
from .nn.optim import AdamState, adam_step, clip_global_norm
from .predict import predict_lines
from .preprocess import LineImage


@dataclass
class BenchResult:
    lines: int
    predict_ms_per_line: float
    train_ms_per_line: float | None

    @property
    def lines_per_second(self) -> float:
        return 1000.0 / self.predict_ms_per_line


def bench(
    model: Model,
    lines: list[LineImage],
    texts: list[str] | None = None,
    batch_size: int = 5,
    train_steps: int = 5,
) -> BenchResult:
    """Time prediction over ``lines`` and, given ``texts``, a few training steps.

    Training steps run on a copy of ``model``; the caller's weights are untouched.
    """
    predict_lines(model, lines[:1])  # warm-up, compiles the numba kernels
    t0 = time.perf_counter()
    predict_lines(model, lines)
    pred_ms = 1000.0 * (time.perf_counter() - t0) / len(lines)

    train_ms = None
    if texts is not None:
        work = model.copy()
        items = []
        for line, text in zip(lines, texts):
            if all(c in work.codec for c in text):
                labels = work.codec.encode(text)
                if min_width_check(work.spec, labels, line.width).feasible:
                    items.append((line.pixels, labels))
        if items:
            rng = np.random.default_rng(0)
            state = AdamState(lr=work.hyper.get("lr", 0.001))
            n_lines = 0
            t0 = time.perf_counter()
            for step in range(train_steps):
                batch = [items[(step * batch_size + i) % len(items)] for i in range(batch_size)]
                res = network_forward_batch(work, [b[0] for b in batch], training=True, rng=rng)
                g = np.zeros(res.logits.shape)
                for i, (_, labels) in enumerate(batch):
                    _, gi = ctc_loss_from_log_probs(res.log_probs(i), labels)
                    g[i, : res.lengths[i]] = gi / len(batch)
                network_backward(g.astype(work.dtype), res)
                clip_global_norm([x for p in work.layers for x in p.grads.values()], 5.0)
                adam_step(work.layers, state)
                n_lines += len(batch)
            train_ms = 1000.0 * (time.perf_counter() - t0) / n_lines
    return BenchResult(len(lines), pred_ms, train_ms)
