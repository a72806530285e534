import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lineocr.preprocess import (
    LINE_HEIGHT,
    PAD,
    ROMAN_NUMERAL_RULES,
    ImageError,
    TextNormRules,
    preprocess_image,
    preprocess_text,
    read_pgm,
    write_pgm,
)


def test_rescale_width_arithmetic():
    out = preprocess_image(np.full((96, 1200), 255, np.uint8))
    assert out.pixels.shape == (48, 632)
    assert out.pixels.dtype == np.float32


def test_identity_scale_only_inverts():
    raw = np.random.default_rng(0).integers(0, 256, (48, 30)).astype(np.uint8)
    out = preprocess_image(raw)
    assert out.width == 30 + 2 * PAD
    np.testing.assert_allclose(out.pixels[:, PAD:-PAD], 1.0 - raw / 255.0, atol=1e-6)


def test_white_page_has_no_ink():
    out = preprocess_image(np.full((20, 50), 255, np.uint8))
    assert not out.pixels.any()


@given(st.integers(1, 120), st.integers(1, 400))
def test_height_padding_and_aspect(h, w):
    raw = np.random.default_rng(h * 1000 + w).integers(0, 256, (h, w)).astype(np.uint8)
    out = preprocess_image(raw)
    assert out.height == LINE_HEIGHT
    assert not out.pixels[:, :PAD].any() and not out.pixels[:, -PAD:].any()
    assert abs((out.width - 2 * PAD) - w * LINE_HEIGHT / h) <= 1


def test_zero_area_rejected():
    with pytest.raises(ImageError):
        preprocess_image(np.zeros((0, 10), np.uint8))
    with pytest.raises(ImageError):
        preprocess_image(np.zeros((10, 0), np.uint8))


def test_original_coordinates():
    out = preprocess_image(np.full((96, 200), 255, np.uint8))
    assert out.to_original_x(PAD) == 0
    assert out.to_original_x(PAD + 100) == pytest.approx(200)
    assert out.to_original_x(0) == 0  # clamped inside the image


def test_pgm_roundtrip_and_comments(tmp_path):
    img = np.arange(12, dtype=np.uint8).reshape(3, 4)
    write_pgm(tmp_path / "a.pgm", img)
    np.testing.assert_array_equal(read_pgm(tmp_path / "a.pgm"), img)
    (tmp_path / "b.pgm").write_bytes(b"P5\n# made by hand\n4 3\n255\n" + img.tobytes())
    np.testing.assert_array_equal(read_pgm(tmp_path / "b.pgm"), img)


@pytest.mark.parametrize(
    "data",
    [b"P2\n1 1\n255\n0", b"P5\n2 2\n255\n\x00", b"P5\n1 1\n65535\n\x00\x00", b"P5\n1", b"garbage"],
)
def test_bad_pgm(tmp_path, data):
    (tmp_path / "x.pgm").write_bytes(data)
    with pytest.raises(ImageError):
        read_pgm(tmp_path / "x.pgm")


def test_text_whitespace_and_empty():
    assert preprocess_text("a  b") == "a b"
    assert preprocess_text(" \ta\n b ") == "a b"
    assert preprocess_text("") == ""


def test_text_composed_form():
    assert preprocess_text("é") == "é"


def test_rule_table_and_file(tmp_path):
    rules = TextNormRules(ROMAN_NUMERAL_RULES)
    assert preprocess_text("Chapter Ⅳ", rules) == "Chapter IV"
    path = tmp_path / "rules.tsv"
    path.write_text("# comment\nſ\ts\n", encoding="utf-8")
    assert preprocess_text("ſo", TextNormRules.from_file(path)) == "so"
    path.write_text("no tab here\n", encoding="utf-8")
    with pytest.raises(ValueError):
        TextNormRules.from_file(path)


@given(st.text())
def test_text_idempotent(s):
    once = preprocess_text(s)
    assert preprocess_text(once) == once
