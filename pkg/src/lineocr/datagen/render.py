from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from ..preprocess import preprocess_text, write_pgm
from . import _glyphs


class GlyphError(KeyError):
    pass


@dataclass(frozen=True)
class GlyphFont:
    name: str
    height: int
    glyphs: dict  # char -> bool ink mask (height, advance)

    @classmethod
    def from_rows(cls, name: str, table: dict) -> "GlyphFont":
        glyphs = {
            ch: np.array([[c == "1" for c in row] for row in rows], dtype=bool)
            for ch, rows in table.items()
        }
        return cls(name, _glyphs.CELL_HEIGHT, glyphs)

    @property
    def charset(self) -> str:
        return "".join(self.glyphs)

    def mask(self, ch: str) -> np.ndarray:
        try:
            return self.glyphs[ch]
        except KeyError:
            raise GlyphError(f"font {self.name!r} has no glyph for {ch!r}") from None


FONTS = {
    "A": GlyphFont.from_rows("A", _glyphs.FONT_A),
    "B": GlyphFont.from_rows("B", _glyphs.FONT_B),
    "C": GlyphFont.from_rows("C", _glyphs.FONT_C),
}


def get_font(name: str) -> GlyphFont:
    return FONTS[name.upper()]


@dataclass(frozen=True)
class NoiseParams:
    flip: float = 0.0  # per-pixel ink/background flip probability
    sigma: float = 0.0  # additive gaussian noise, intensity in [0, 1]
    jitter: int = 0  # horizontal offset of every glyph, +-pixels
    scale: float = 0.0  # horizontal stretch of the whole line, +-fraction

    def __post_init__(self):
        if not 0.0 <= self.flip <= 0.1:
            raise ValueError(f"flip probability {self.flip} outside [0, 0.1]")
        if not 0.0 <= self.sigma <= 0.2:
            raise ValueError(f"noise sigma {self.sigma} outside [0, 0.2]")
        if self.jitter < 0 or not 0.0 <= self.scale < 0.5:
            raise ValueError("jitter must be >= 0 and scale in [0, 0.5)")

    @classmethod
    def level(cls, amount: float) -> "NoiseParams":
        """Preset scaled by ``amount`` in [0, 1]; 1.0 is the strongest preset."""
        amount = min(max(amount, 0.0), 1.0)
        return cls(flip=0.02 * amount, sigma=0.1 * amount, jitter=int(round(amount)), scale=0.1 * amount)


def render_line(text: str, font: GlyphFont, noise: NoiseParams = NoiseParams(), seed: int = 0) -> np.ndarray:
    """Render ``text`` into an 8-bit image (255 = background, 0 = ink)."""
    masks = [font.mask(ch) for ch in text]
    rng = np.random.default_rng(seed)
    if noise.jitter:
        offsets = rng.integers(-noise.jitter, noise.jitter + 1, size=len(masks))
        offsets[0] = max(offsets[0], 0) if len(masks) else 0
    else:
        offsets = np.zeros(len(masks), dtype=int)
    width = sum(m.shape[1] for m in masks) + (2 * noise.jitter if noise.jitter else 0)
    ink = np.zeros((font.height, max(width, 1)), dtype=np.float64)
    x = noise.jitter
    for m, off in zip(masks, offsets):
        x0 = max(x + int(off), 0)
        ink[:, x0 : x0 + m.shape[1]] = np.maximum(ink[:, x0 : x0 + m.shape[1]], m)
        x += m.shape[1]
    if noise.scale:
        factor = 1.0 + rng.uniform(-noise.scale, noise.scale)
        new_w = max(1, int(round(ink.shape[1] * factor)))
        cols = np.minimum((np.arange(new_w) / factor).astype(int), ink.shape[1] - 1)
        ink = ink[:, cols]
    if noise.flip:
        ink = np.where(rng.random(ink.shape) < noise.flip, 1.0 - ink, ink)
    if noise.sigma:
        ink = ink + rng.normal(0.0, noise.sigma, ink.shape)
    return np.round(255.0 * (1.0 - np.clip(ink, 0.0, 1.0))).astype(np.uint8)


_WORDS_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def random_texts(
    n: int,
    seed: int = 0,
    alphabet: str = _WORDS_ALPHABET,
    min_words: int = 1,
    max_words: int = 3,
    min_word: int = 2,
    max_word: int = 6,
) -> list[str]:
    """Space-separated random "words" over ``alphabet``."""
    rng = np.random.default_rng(seed)
    chars = list(alphabet)
    out = []
    for _ in range(n):
        words = [
            "".join(rng.choice(chars, size=rng.integers(min_word, max_word + 1)))
            for _ in range(rng.integers(min_words, max_words + 1))
        ]
        out.append(" ".join(words))
    return out


def _source_lines(source) -> list[str]:
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text(encoding="utf-8").splitlines()
    else:
        lines = list(source)
    lines = [preprocess_text(t) for t in lines]
    return [t for t in lines if t]


def gen_dataset(
    source,
    count: int,
    out_dir,
    noise: NoiseParams = NoiseParams(),
    seed: int = 0,
    font: GlyphFont | str = "A",
    text_seed: int | None = None,
    prefix: str = "line",
) -> list[Path]:
    """Render ``count`` lines sampled from ``source`` into ``<name>.pgm`` + ``<name>.gt.txt``.

    ``source`` is a text file or a sequence of strings. Lines are taken in
    order and cycled when ``count`` exceeds the source, unless ``text_seed``
    is given, in which case they are drawn with that seed. ``seed`` drives
    only the noise.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    if isinstance(font, str):
        font = get_font(font)
    lines = _source_lines(source)
    if not lines:
        raise ValueError("text source contains no non-empty lines")
    if text_seed is None:
        picked = [lines[i % len(lines)] for i in range(count)]
    else:
        idx = np.random.default_rng(text_seed).integers(0, len(lines), size=count)
        picked = [lines[i] for i in idx]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    seeds = np.random.SeedSequence(seed).generate_state(count)
    digits = max(4, len(str(count - 1)))
    written = []
    for i, text in enumerate(picked):
        name = f"{prefix}{i:0{digits}d}"
        img = render_line(text, font, noise, int(seeds[i]))
        write_pgm(out / f"{name}.pgm", img)
        (out / f"{name}.gt.txt").write_text(text, encoding="utf-8")
        written.append(out / f"{name}.pgm")
    return written
