"""Compact network description strings such as ``C,Mp(2x2),C,Mp(2x2),LSTM(200)``.

Tokens, comma separated, keywords case-insensitive:

``C`` / ``C(n)``
    3x3 convolution + ReLU. A bare ``C`` takes its filter count from the
    filter sequence (64, 128, 256, ... by default); ``C(n)`` is explicit.
``Mp(AxB)``
    max pooling, ``A`` = horizontal factor, ``B`` = vertical factor, each 1 or 2.
    ``Mp(1x2)`` halves only the height.
``LSTM(n)``
    bidirectional LSTM with ``n`` hidden units per direction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

DEFAULT_SPEC = "C,Mp(2x2),C,Mp(2x2),LSTM(200)"


class SpecError(ValueError):
    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        if token is not None:
            message = f"token {position} {token!r}: {message}"
        super().__init__(message)
        self.token = token
        self.position = position


@dataclass(frozen=True)
class Conv:
    filters: int


@dataclass(frozen=True)
class MaxPool:
    kh: int
    kw: int


@dataclass(frozen=True)
class LSTM:
    hidden: int


LayerSpec = Conv | MaxPool | LSTM


@dataclass(frozen=True)
class NetworkSpec:
    layers: tuple[LayerSpec, ...]
    source: str = ""

    def __eq__(self, other):
        # structural equality; the source string is informational
        return isinstance(other, NetworkSpec) and self.layers == other.layers

    def __hash__(self):
        return hash(self.layers)

    @property
    def x_downsample(self) -> int:
        f = 1
        for layer in self.layers:
            if isinstance(layer, MaxPool):
                f *= layer.kw
        return f

    @property
    def y_downsample(self) -> int:
        f = 1
        for layer in self.layers:
            if isinstance(layer, MaxPool):
                f *= layer.kh
        return f

    def timesteps(self, width: int) -> int:
        """Sequence length produced for an input of ``width`` pixels."""
        for layer in self.layers:
            if isinstance(layer, MaxPool):
                width //= layer.kw
        return width

    def feature_height(self, height: int) -> int:
        for layer in self.layers:
            if isinstance(layer, MaxPool):
                height //= layer.kh
        return height


def default_filters(n: int) -> list[int]:
    return [64 * 2**i for i in range(n)]


_CONV = re.compile(r"c(?:\((\s*[^)]*)\))?", re.I)
_POOL = re.compile(r"mp\(([^)]*)\)", re.I)
_LSTM = re.compile(r"lstm\(([^)]*)\)", re.I)


def _int_arg(text: str, token: str, pos: int) -> int:
    text = text.strip()
    if not re.fullmatch(r"\d+", text):
        raise SpecError(f"expected a positive integer, got {text!r}", token, pos)
    value = int(text)
    if value < 1:
        raise SpecError("argument must be at least 1", token, pos)
    return value


def _split(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    tokens, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            tokens.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    tokens.append("".join(cur))
    return [t.strip() for t in tokens]


def parse_spec(text: str, filters: Sequence[int] | None = None) -> NetworkSpec:
    """Parse a network string into a :class:`NetworkSpec`.

    Positions in error messages are 1-based token indices.
    """
    if not text or not text.strip():
        raise SpecError("empty network spec")
    tokens = _split(text)
    n_bare = sum(1 for t in tokens if t.lower() == "c")
    filters = list(filters) if filters is not None else default_filters(n_bare)
    layers: list[LayerSpec] = []
    conv_i = 0
    seen_lstm = False
    for pos, tok in enumerate(tokens, start=1):
        if tok.count("(") != tok.count(")") or tok.count("(") > 1:
            raise SpecError("malformed parentheses", tok, pos)
        if not tok:
            raise SpecError("empty token", tok, pos)
        if m := _CONV.fullmatch(tok):
            if seen_lstm:
                raise SpecError("convolution after an LSTM layer", tok, pos)
            if m.group(1) is not None:
                layers.append(Conv(_int_arg(m.group(1), tok, pos)))
            else:
                if conv_i >= len(filters):
                    raise SpecError(f"no filter count for convolution #{conv_i + 1}", tok, pos)
                if filters[conv_i] < 1:
                    raise SpecError("filter count must be at least 1", tok, pos)
                layers.append(Conv(int(filters[conv_i])))
                conv_i += 1
        elif m := _POOL.fullmatch(tok):
            if seen_lstm:
                raise SpecError("pooling after an LSTM layer", tok, pos)
            parts = m.group(1).lower().split("x")
            if len(parts) != 2:
                raise SpecError("pool size must look like AxB", tok, pos)
            kw, kh = (_int_arg(p, tok, pos) for p in parts)
            if kw not in (1, 2) or kh not in (1, 2):
                raise SpecError("pool factors must be 1 or 2", tok, pos)
            layers.append(MaxPool(kh=kh, kw=kw))
        elif m := _LSTM.fullmatch(tok):
            layers.append(LSTM(_int_arg(m.group(1), tok, pos)))
            seen_lstm = True
        else:
            raise SpecError("unknown layer", tok, pos)
    return NetworkSpec(tuple(layers), text)


def render_spec(spec: NetworkSpec, explicit_filters: bool = False) -> str:
    """Canonical string form.

    Bare ``C`` tokens are emitted when the filter counts follow the default
    doubling sequence; otherwise (or with ``explicit_filters``) ``C(n)`` is used
    so the string parses back to the same layers on its own.
    """
    if not spec.layers:
        raise SpecError("cannot render an empty network spec")
    convs = [layer.filters for layer in spec.layers if isinstance(layer, Conv)]
    bare = not explicit_filters and convs == default_filters(len(convs))
    out = []
    for layer in spec.layers:
        if isinstance(layer, Conv):
            out.append("C" if bare else f"C({layer.filters})")
        elif isinstance(layer, MaxPool):
            out.append(f"Mp({layer.kw}x{layer.kh})")
        else:
            out.append(f"LSTM({layer.hidden})")
    return ",".join(out)


@dataclass(frozen=True)
class WidthCheck:
    feasible: bool
    timesteps: int
    required_timesteps: int
    heuristic_timesteps: int

    def heuristic_min_width(self, spec: NetworkSpec) -> int:
        return self.heuristic_timesteps * spec.x_downsample


def required_timesteps(labels: Sequence[int]) -> int:
    """Shortest frame sequence that can collapse to ``labels``."""
    repeats = sum(1 for a, b in zip(labels, labels[1:]) if a == b)
    return len(labels) + repeats


def min_width_check(spec: NetworkSpec, labels: Sequence[int], image_width: int) -> WidthCheck:
    t = spec.timesteps(image_width)
    req = required_timesteps(labels)
    return WidthCheck(
        feasible=t >= req,
        timesteps=t,
        required_timesteps=req,
        heuristic_timesteps=2 * len(labels),
    )
