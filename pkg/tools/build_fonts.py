"""Snapshot the bitmap fonts out of Pillow into ``lineocr/datagen/_glyphs.py``.

The generated module is committed so rendering never depends on the Pillow
version installed at runtime. Re-run only when the glyph set changes::

    python tools/build_fonts.py
"""

from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw, ImageFont

CELL_HEIGHT = 16
BASELINE = 12
SLANT_MAX = BASELINE // 3 + 1
CHARSET = [chr(c) for c in range(32, 127)]
OUT = Path(__file__).resolve().parents[1] / "src" / "lineocr" / "datagen" / "_glyphs.py"


def font_a():
    """Pillow's legacy 6x11 bitmap font, padded to a 16-row cell."""
    font = ImageFont.load_default_imagefont()
    glyphs = {}
    for ch in CHARSET:
        m = font.getmask(ch)
        a = np.array(m, dtype=np.uint8).reshape(m.size[1], m.size[0]) > 0
        cell = np.zeros((CELL_HEIGHT, a.shape[1]), dtype=bool)
        cell[2 : 2 + a.shape[0]] = a
        glyphs[ch] = cell
    return glyphs


def font_b(a):
    """Oblique cut of font A: rows above the baseline slant right, trailing blank columns trimmed."""
    glyphs = {}
    for ch, cell in a.items():
        h, w = cell.shape
        out = np.zeros((h, w + SLANT_MAX), dtype=bool)
        for r in range(h):
            shift = max(0, (BASELINE - r) // 3)
            out[r, shift : shift + w] = cell[r]
        ink = np.flatnonzero(out.any(axis=0))
        glyphs[ch] = out[:, : ink[-1] + 2] if ink.size else cell
    return glyphs


def font_c():
    """Pillow's embedded proportional sans-serif at 13px, thresholded."""
    font = ImageFont.load_default(size=13)
    glyphs = {}
    for ch in CHARSET:
        advance = max(3, int(round(font.getlength(ch))))
        right = font.getbbox(ch)[2] if ch != " " else advance
        width = max(advance, right)
        img = Image.new("L", (width, CELL_HEIGHT), 0)
        ImageDraw.Draw(img).text((0, 0), ch, fill=255, font=font)
        glyphs[ch] = np.array(img) >= 128
    return glyphs


def encode(glyphs):
    lines = []
    for ch, cell in glyphs.items():
        rows = ["".join("1" if v else "0" for v in row) for row in cell]
        lines.append(f"    {ch!r}: {rows!r},")
    return "\n".join(lines)


def main():
    a = font_a()
    text = (
        '"""Generated by tools/build_fonts.py. Do not edit."""\n\n'
        f"CELL_HEIGHT = {CELL_HEIGHT}\n\n"
        "FONT_A = {\n" + encode(a) + "\n}\n\n"
        "FONT_B = {\n" + encode(font_b(a)) + "\n}\n\n"
        "FONT_C = {\n" + encode(font_c()) + "\n}\n"
    )
    OUT.write_text(text, encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
