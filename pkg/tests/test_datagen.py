import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lineocr.codec import build_codec
from lineocr.datagen import FONTS, NoiseParams, gen_dataset, get_font, random_texts, render_line
from lineocr.datagen.render import GlyphError
from lineocr.netspec import DEFAULT_SPEC, min_width_check, parse_spec
from lineocr.preprocess import preprocess_image, preprocess_text, read_pgm


@pytest.mark.parametrize("font", ["A", "B", "C"])
def test_clean_render_is_glyph_concatenation(font):
    f = get_font(font)
    img = render_line("ab", f)
    expected = np.concatenate([f.mask("a"), f.mask("b")], axis=1)
    np.testing.assert_array_equal(img, np.where(expected, 0, 255).astype(np.uint8))


def test_fonts_cover_printable_ascii_and_differ():
    printable = {chr(c) for c in range(32, 127)}
    for f in FONTS.values():
        assert printable <= set(f.charset)
    for x, y in [("A", "B"), ("A", "C"), ("B", "C")]:
        a, b = get_font(x), get_font(y)
        assert sum(not np.array_equal(a.mask(c), b.mask(c)) for c in "abcdefghij") >= 8


def test_render_deterministic_and_seed_sensitive():
    noise = NoiseParams.level(1.0)
    f = get_font("A")
    assert render_line("hello", f, noise, 3).tobytes() == render_line("hello", f, noise, 3).tobytes()
    assert render_line("hello", f, noise, 3).tobytes() != render_line("hello", f, noise, 4).tobytes()


def test_missing_glyph_named():
    with pytest.raises(GlyphError, match="'€'"):
        render_line("a€", get_font("A"))


def test_noise_ranges():
    with pytest.raises(ValueError):
        NoiseParams(flip=0.2)
    with pytest.raises(ValueError):
        NoiseParams(sigma=0.5)
    assert NoiseParams.level(0.0) == NoiseParams()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(["A", "B", "C"]), st.floats(0, 1))
def test_generated_lines_wide_enough_for_default_spec(seed, font, noise):
    spec = parse_spec(DEFAULT_SPEC)
    text = random_texts(1, seed=seed)[0]
    line = preprocess_image(render_line(text, get_font(font), NoiseParams.level(noise), seed))
    labels = build_codec([text]).encode(text)
    check = min_width_check(spec, labels, line.width)
    assert line.width >= check.heuristic_min_width(spec)


def test_random_texts_shape():
    texts = random_texts(50, seed=1)
    assert len(texts) == 50 and texts == random_texts(50, seed=1)
    for t in texts:
        words = t.split(" ")
        assert 1 <= len(words) <= 3 and all(2 <= len(w) <= 6 for w in words)


def test_gen_dataset_layout(tmp_path):
    texts = random_texts(10, seed=0)
    paths = gen_dataset(texts, 50, tmp_path, NoiseParams.level(0.3), seed=1)
    assert len(paths) == 50
    assert len(list(tmp_path.glob("*.pgm"))) == 50 and len(list(tmp_path.glob("*.gt.txt"))) == 50
    for i, p in enumerate(paths):
        gt = p.with_name(p.name[:-4] + ".gt.txt").read_text(encoding="utf-8")
        assert gt == preprocess_text(texts[i % 10])
        assert read_pgm(p).shape[0] == get_font("A").height


def test_gen_dataset_seeds(tmp_path):
    texts = random_texts(30, seed=0)
    a = gen_dataset(texts, 5, tmp_path / "a", NoiseParams.level(0.5), seed=1, text_seed=9)
    b = gen_dataset(texts, 5, tmp_path / "b", NoiseParams.level(0.5), seed=2, text_seed=9)
    for pa, pb in zip(a, b):
        ga = pa.with_name(pa.name[:-4] + ".gt.txt").read_text()
        gb = pb.with_name(pb.name[:-4] + ".gt.txt").read_text()
        assert ga == gb
        assert pa.read_bytes() != pb.read_bytes()


def test_gen_dataset_from_file_and_errors(tmp_path):
    src = tmp_path / "src.txt"
    src.write_text("first line\n\n  second   line \n", encoding="utf-8")
    paths = gen_dataset(src, 3, tmp_path / "out", font="B")
    gts = [p.with_name(p.name[:-4] + ".gt.txt").read_text() for p in paths]
    assert gts == ["first line", "second line", "first line"]
    with pytest.raises(ValueError):
        gen_dataset(src, 0, tmp_path / "none")
    with pytest.raises(OSError):
        gen_dataset(tmp_path / "missing.txt", 3, tmp_path / "none")
