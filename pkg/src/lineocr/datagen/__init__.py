"""Synthetic line images rendered from fixed bitmap fonts."""

from .render import (
    FONTS,
    GlyphFont,
    NoiseParams,
    gen_dataset,
    get_font,
    random_texts,
    render_line,
)

__all__ = [
    "FONTS",
    "GlyphFont",
    "NoiseParams",
    "gen_dataset",
    "get_font",
    "random_texts",
    "render_line",
]
