import numpy as np
import pytest

from lineocr.codec import Codec, build_codec
from lineocr.datagen import gen_dataset, get_font, render_line
from lineocr.model import init_model
from lineocr.netspec import parse_spec
from lineocr.predict import (
    Ensemble,
    EnsembleError,
    decode_matrix,
    predict_line,
    predict_lines,
    prob_matrices,
    vote_confidence,
    vote_lines,
    vote_matrices,
)
from lineocr.preprocess import preprocess_image
from lineocr.train import TrainConfig, load_dataset, train_loop


def test_confidence_sum_overrules_majority():
    # classes: blank, I, l; one timestep per voter
    codec = Codec(("I", "l"))
    voters = [np.array([[0.0, 0.6, 0.4]]), np.array([[0.0, 0.55, 0.45]]), np.array([[0.0, 0.2, 0.8]])]
    majority = [codec.decode([int(v.argmax())]) for v in voters]
    assert majority.count("I") == 2
    remap = np.arange(3)
    avg = vote_matrices(voters, [remap] * 3, 3)
    np.testing.assert_allclose(avg[0], [0.0, 1.35 / 3, 1.65 / 3])
    assert decode_matrix(avg, codec, None, 4, False).text == "l"


def test_vote_matrices_union_codec_and_length_check():
    a = np.array([[0.5, 0.5, 0.0]])  # blank, x, y in voter codec (x, y)
    b = np.array([[0.2, 0.8]])  # blank, z
    avg = vote_matrices([a, b], [np.array([0, 1, 2]), np.array([0, 3])], 4)
    np.testing.assert_allclose(avg, [[0.35, 0.25, 0.0, 0.4]])
    np.testing.assert_allclose(avg.sum(axis=1), 1.0)
    with pytest.raises(EnsembleError):
        vote_matrices([a, np.vstack([b, b])], [np.array([0, 1, 2]), np.array([0, 3])], 4)


def test_blank_matrix_gives_empty_prediction():
    probs = np.array([[0.9, 0.1], [0.8, 0.2]])
    pred = decode_matrix(probs, Codec(("a",)), None, 4, True)
    assert pred.text == "" and pred.chars == []


@pytest.fixture(scope="module")
def hello_model(tmp_path_factory):
    """Overfit a small network on one line so decoding is meaningful."""
    d = tmp_path_factory.mktemp("hello")
    gen_dataset(["hello"], 1, d)
    ds = load_dataset(d)
    cfg = TrainConfig(spec="C(8),Mp(2x2),LSTM(16)", checkpoint_interval=50, max_iterations=600,
                      dropout=0.0, target_cer=0.0, batch_size=1)
    model, report = train_loop(ds, ds, cfg)
    assert report.best_cer == 0.0
    return model, ds


def test_extended_prediction_positions(hello_model):
    model, ds = hello_model
    line = ds.samples[0].image
    pred = predict_line(model, line, extended=True)
    assert pred.text == "hello"
    assert "".join(c.char for c in pred.chars) == "hello"
    xs = [(c.start_px, c.end_px) for c in pred.chars]
    assert all(a <= b for a, b in xs)
    assert all(b1 <= a2 for (_, b1), (a2, _) in zip(xs, xs[1:]))
    assert all(0 <= a and b <= line.orig_width for a, b in xs)
    assert all(0 < c.confidence <= 1 for c in pred.chars)
    assert pred.probs is not None and pred.probs.shape[1] == len(model.codec)
    plain = predict_line(model, line)
    assert plain.text == pred.text and plain.probs is None
    rec = pred.to_record()
    assert rec["text"] == "hello" and len(rec["chars"]) == 5


def test_singleton_and_identical_ensembles(hello_model):
    model, ds = hello_model
    line = ds.samples[0].image
    single = predict_line(model, line, extended=True)
    one = vote_confidence(Ensemble([model]), line, extended=True)
    assert one.text == single.text
    np.testing.assert_array_equal(one.probs, single.probs)
    three = vote_confidence(Ensemble([model, model.copy(), model.copy()]), line)
    assert three.text == single.text


def test_scaling_voters_keeps_argmax(hello_model):
    model, ds = hello_model
    probs = prob_matrices(model, [ds.samples[0].image])[0]
    mats = [probs, np.random.default_rng(0).dirichlet(np.ones(len(model.codec)), size=len(probs))]
    remaps = [np.arange(len(model.codec))] * 2
    a = vote_matrices(mats, remaps, len(model.codec))
    b = vote_matrices([3.0 * m for m in mats], remaps, len(model.codec))
    np.testing.assert_array_equal(a.argmax(axis=1), b.argmax(axis=1))


def test_ensemble_checks():
    with pytest.raises(EnsembleError):
        Ensemble([])
    codec = build_codec(["ab"])
    m1 = init_model(parse_spec("C(2),Mp(2x2),LSTM(3)"), codec)
    m2 = init_model(parse_spec("C(2),Mp(1x2),LSTM(3)"), codec)
    with pytest.raises(EnsembleError):
        Ensemble([m1, m2])
    m3 = init_model(parse_spec("C(2),Mp(2x2),LSTM(3)"), build_codec(["bz"]))
    ens = Ensemble([m1, m3])
    assert ens.codec.chars == ("a", "b", "z")
    np.testing.assert_array_equal(ens.remaps[1], [0, 2, 3])


def test_batched_prediction_matches_single_lines():
    codec = build_codec(["abc "])
    model = init_model(parse_spec("C(4),Mp(2x2),LSTM(6)"), codec, seed=1, dtype=np.float64)
    lines = [preprocess_image(render_line(t, get_font("A"))) for t in ["a", "abc ab", "cb"]]
    batched = predict_lines(model, lines, extended=True)
    for line, pred in zip(lines, batched):
        np.testing.assert_allclose(predict_line(model, line, extended=True).probs, pred.probs, atol=1e-12)
    voted = vote_lines(Ensemble([model, model]), lines)
    assert [p.text for p in voted] == [p.text for p in batched]
