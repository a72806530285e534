"""CTC loss, greedy decoding and an exhaustive reference implementation.

Blank is label 0 throughout. Probability matrices are ``(T, L)`` arrays whose
rows are distributions over the codec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numba
import numpy as np

from .netspec import required_timesteps

BLANK = 0
BRUTE_FORCE_LIMIT = 10**7


class CTCInfeasibleError(ValueError):
    """The target needs more frames than the probability matrix provides."""


def _check_feasible(t_len: int, target: Sequence[int]) -> None:
    need = required_timesteps(target)
    if t_len < need:
        raise CTCInfeasibleError(
            f"target of length {len(target)} needs at least {need} timesteps, got {t_len}"
        )


def extend_with_blanks(target: Sequence[int]) -> np.ndarray:
    ext = np.zeros(2 * len(target) + 1, dtype=np.int64)
    ext[1::2] = target
    return ext


@numba.njit(cache=True)
def _logaddexp3(a, b, c):
    m = max(a, b, c)
    if m == -np.inf:
        return -np.inf
    return m + math.log(math.exp(a - m) + math.exp(b - m) + math.exp(c - m))


@numba.njit(cache=True)
def _alpha_beta(logp, ext):
    t_len = logp.shape[0]
    s_len = ext.shape[0]
    ninf = -np.inf
    alpha = np.full((t_len, s_len), ninf)
    beta = np.full((t_len, s_len), ninf)
    alpha[0, 0] = logp[0, ext[0]]
    if s_len > 1:
        alpha[0, 1] = logp[0, ext[1]]
    for t in range(1, t_len):
        for s in range(s_len):
            a = alpha[t - 1, s]
            b = alpha[t - 1, s - 1] if s >= 1 else ninf
            c = ninf
            if s >= 2 and ext[s] != 0 and ext[s] != ext[s - 2]:
                c = alpha[t - 1, s - 2]
            acc = _logaddexp3(a, b, c)
            alpha[t, s] = acc + logp[t, ext[s]] if acc != ninf else ninf
    # beta[t, s]: log-probability of emitting the rest after being at s at time t
    beta[t_len - 1, s_len - 1] = 0.0
    if s_len > 1:
        beta[t_len - 1, s_len - 2] = 0.0
    for t in range(t_len - 2, -1, -1):
        for s in range(s_len):
            a = beta[t + 1, s] + logp[t + 1, ext[s]]
            b = ninf
            if s + 1 < s_len:
                b = beta[t + 1, s + 1] + logp[t + 1, ext[s + 1]]
            c = ninf
            if s + 2 < s_len and ext[s + 2] != 0 and ext[s + 2] != ext[s]:
                c = beta[t + 1, s + 2] + logp[t + 1, ext[s + 2]]
            beta[t, s] = _logaddexp3(a, b, c)
    return alpha, beta


def _log_likelihood(alpha: np.ndarray) -> float:
    last = alpha[-1, -2:] if alpha.shape[1] > 1 else alpha[-1, -1:]
    return float(np.logaddexp.reduce(last))


def ctc_loss_from_log_probs(log_probs: np.ndarray, target: Sequence[int]):
    """Negative log-likelihood and its gradient w.r.t. the pre-softmax logits.

    ``log_probs`` must be a log-softmax output of shape (T, L). The returned
    gradient is ``softmax(logits) - posterior occupancy`` per frame and class.
    """
    log_probs = np.asarray(log_probs, dtype=np.float64)
    target = [int(x) for x in target]
    t_len, n_cls = log_probs.shape
    _check_feasible(t_len, target)
    if any(x <= BLANK or x >= n_cls for x in target):
        raise ValueError(f"target labels must lie in [1, {n_cls - 1}]")
    ext = extend_with_blanks(target)
    alpha, beta = _alpha_beta(log_probs, ext)
    log_p = _log_likelihood(alpha)
    if not np.isfinite(log_p):
        return math.inf, np.zeros_like(log_probs)
    occ = np.exp(alpha + beta - log_p)
    post = np.zeros_like(log_probs)
    np.add.at(post, (slice(None), ext), occ)
    grad = np.exp(log_probs) - post
    return -log_p, grad


def ctc_loss(probs: np.ndarray, target: Sequence[int]):
    """CTC loss for a probability matrix. Returns ``(loss, grad_logits)``."""
    with np.errstate(divide="ignore"):
        log_probs = np.log(np.asarray(probs, dtype=np.float64))
    return ctc_loss_from_log_probs(log_probs, target)


def collapse(path: Sequence[int], blank: int = BLANK) -> list[int]:
    """Merge adjacent repeats, then drop blanks."""
    out = []
    prev = None
    for p in path:
        p = int(p)
        if p != prev and p != blank:
            out.append(p)
        prev = p
    return out


def ctc_brute_force(probs: np.ndarray, target: Sequence[int]) -> float:
    """``-ln p(target)`` by summing every frame path that collapses to ``target``.

    Exponential in T; meant as a test oracle only.
    """
    probs = np.asarray(probs, dtype=np.float64)
    t_len, n_cls = probs.shape
    if float(n_cls) ** t_len > BRUTE_FORCE_LIMIT:
        raise ValueError(f"{n_cls}^{t_len} paths exceed the brute-force limit")
    target = [int(x) for x in target]
    _check_feasible(t_len, target)
    # all paths as rows, most significant frame first
    paths = np.indices((n_cls,) * t_len).reshape(t_len, -1).T
    path_p = np.prod(probs[np.arange(t_len), paths], axis=1)
    # collapse every path at once into (length, base-L code)
    keep = paths != BLANK
    keep[:, 1:] &= paths[:, 1:] != paths[:, :-1]
    code = np.zeros(len(paths), dtype=np.int64)
    length = np.zeros(len(paths), dtype=np.int64)
    for t in range(t_len):
        k = keep[:, t]
        code = np.where(k, code * n_cls + paths[:, t], code)
        length += k
    want = 0
    for x in target:
        want = want * n_cls + x
    total = path_p[(length == len(target)) & (code == want)].sum()
    return -math.log(total) if total > 0 else math.inf


@dataclass
class Decoded:
    labels: list[int]
    positions: list[tuple[int, int]]
    confidences: list[float]


def greedy_decode(probs: np.ndarray) -> Decoded:
    """Best-path decoding with per-character frame ranges and confidences.

    Each emitted character covers the run of identical argmax frames that
    produced it (end exclusive); its confidence is the mean argmax probability
    over that run. Ties go to the lowest label index.
    """
    probs = np.asarray(probs)
    best = probs.argmax(axis=1)
    labels, positions, confs = [], [], []
    t_len = len(best)
    t = 0
    while t < t_len:
        k = int(best[t])
        end = t + 1
        while end < t_len and best[end] == k:
            end += 1
        if k != BLANK:
            labels.append(k)
            positions.append((t, end))
            confs.append(float(probs[t:end, k].mean()))
        t = end
    return Decoded(labels, positions, confs)
