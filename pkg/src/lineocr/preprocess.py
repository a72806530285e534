"""Line image and ground-truth text normalization, plus binary PGM I/O."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image

LINE_HEIGHT = 48
PAD = 16


class ImageError(ValueError):
    pass


# -- PGM -----------------------------------------------------------------------


def _pgm_tokens(data: bytes, count: int):
    """Read ``count`` whitespace-separated header tokens, skipping comments."""
    tokens, i = [], 0
    while len(tokens) < count:
        while i < len(data) and data[i : i + 1].isspace():
            i += 1
        if i < len(data) and data[i : i + 1] == b"#":
            while i < len(data) and data[i : i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        j = i
        while j < len(data) and not data[j : j + 1].isspace():
            j += 1
        if j == i:
            raise ImageError("truncated PGM header")
        tokens.append(data[i:j])
        i = j
    return tokens, i + 1  # a single whitespace byte follows maxval


def read_pgm(path) -> np.ndarray:
    """Read an 8-bit binary (P5) PGM into a ``(height, width)`` uint8 array."""
    data = Path(path).read_bytes()
    try:
        (magic, w, h, maxval), offset = _pgm_tokens(data, 4)
        w, h, maxval = int(w), int(h), int(maxval)
    except ValueError as exc:
        raise ImageError(f"{path}: not a binary PGM ({exc})") from None
    if magic != b"P5":
        raise ImageError(f"{path}: not a binary PGM (magic {magic!r})")
    if maxval != 255:
        raise ImageError(f"{path}: only 8-bit PGM is supported (maxval {maxval})")
    body = data[offset : offset + w * h]
    if len(body) != w * h:
        raise ImageError(f"{path}: truncated PGM body")
    return np.frombuffer(body, dtype=np.uint8).reshape(h, w).copy()


def write_pgm(path, image: np.ndarray) -> None:
    image = np.asarray(image, dtype=np.uint8)
    h, w = image.shape
    Path(path).write_bytes(b"P5\n%d %d\n255\n" % (w, h) + image.tobytes())


# -- images --------------------------------------------------------------------


@dataclass
class LineImage:
    """Normalized line: height 48, ink = 1.0, 16 blank columns on both sides."""

    pixels: np.ndarray  # (48, width) float32
    orig_width: int
    orig_height: int

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def to_original_x(self, x: float) -> float:
        """Map a column of the normalized line back to the raw image."""
        content = self.width - 2 * PAD
        return min(max((x - PAD) * self.orig_width / content, 0.0), float(self.orig_width))


def scaled_width(width: int, height: int) -> int:
    return max(1, int(np.floor(width * LINE_HEIGHT / height + 0.5)))


def preprocess_image(raw: np.ndarray) -> LineImage:
    """Grayscale -> height 48 (bilinear, proportional) -> inverted -> padded."""
    raw = np.asarray(raw)
    if raw.ndim == 3:
        raw = np.asarray(Image.fromarray(raw.astype(np.uint8)).convert("L"))
    if raw.ndim != 2 or raw.shape[0] < 1 or raw.shape[1] < 1:
        raise ImageError(f"expected a non-empty 2-D image, got shape {raw.shape}")
    h, w = raw.shape
    new_w = scaled_width(w, h)
    img = Image.fromarray(raw.astype(np.uint8))
    if (new_w, LINE_HEIGHT) != (w, h):
        img = img.resize((new_w, LINE_HEIGHT), Image.Resampling.BILINEAR)
    ink = 1.0 - np.asarray(img, dtype=np.float32) / 255.0
    pixels = np.zeros((LINE_HEIGHT, new_w + 2 * PAD), dtype=np.float32)
    pixels[:, PAD : PAD + new_w] = ink
    return LineImage(pixels, w, h)


# -- text ----------------------------------------------------------------------

# Example table: unicode roman numeral code points to latin letters.
ROMAN_NUMERAL_RULES = [
    (chr(cp), unicodedata.normalize("NFKC", chr(cp)))
    for cp in range(0x2160, 0x2180)
]

_WS = re.compile(r"\s+")


@dataclass
class TextNormRules:
    replacements: list[tuple[str, str]] = field(default_factory=list)
    unicode_form: str | None = "NFC"
    collapse_whitespace: bool = True

    @classmethod
    def from_file(cls, path) -> "TextNormRules":
        """One ``pattern<TAB>replacement`` pair per line; ``#`` starts a comment."""
        rules = []
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line or line.startswith("#"):
                continue
            if "\t" not in line:
                raise ValueError(f"{path}:{lineno}: expected pattern<TAB>replacement")
            pattern, replacement = line.split("\t", 1)
            rules.append((pattern, replacement))
        return cls(rules)


DEFAULT_RULES = TextNormRules()


def preprocess_text(raw: str, rules: TextNormRules = DEFAULT_RULES) -> str:
    text = unicodedata.normalize(rules.unicode_form, raw) if rules.unicode_form else raw
    for pattern, replacement in rules.replacements:
        text = text.replace(pattern, replacement)
    if rules.collapse_whitespace:
        text = _WS.sub(" ", text)
    return text.strip()
