import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lineocr.codec import build_codec
from lineocr.model import init_model
from lineocr.netspec import (
    LSTM,
    Conv,
    MaxPool,
    NetworkSpec,
    SpecError,
    min_width_check,
    parse_spec,
    render_spec,
    required_timesteps,
)
from lineocr.nn.network import network_forward_batch

# architectures compared in the CER table, with their layer lists under the default filter sequence
TABLE_SPECS = {
    "C, Mp(2x2), C, Mp(2x2), LSTM(200)": (Conv(64), MaxPool(2, 2), Conv(128), MaxPool(2, 2), LSTM(200)),
    "LSTM(200)": (LSTM(200),),
    "C, Mp(1x2), C, Mp(1x2), LSTM(200)": (Conv(64), MaxPool(kh=2, kw=1), Conv(128), MaxPool(kh=2, kw=1), LSTM(200)),
    "C, Mp(1x2), C, Mp(1x2), LSTM(100)": (Conv(64), MaxPool(kh=2, kw=1), Conv(128), MaxPool(kh=2, kw=1), LSTM(100)),
    "C, Mp(1x2), C, Mp(1x2), C, Mp(1x2), LSTM(200)": (
        Conv(64),
        MaxPool(kh=2, kw=1),
        Conv(128),
        MaxPool(kh=2, kw=1),
        Conv(256),
        MaxPool(kh=2, kw=1),
        LSTM(200),
    ),
}


@pytest.mark.parametrize("text", list(TABLE_SPECS))
def test_table_specs_parse_to_documented_layers(text):
    spec = parse_spec(text)
    assert spec.layers == TABLE_SPECS[text]
    assert parse_spec(render_spec(spec)) == spec


def test_default_spec_downsampling():
    spec = parse_spec("C,Mp(2x2),C,Mp(2x2),LSTM(200)")
    assert spec.x_downsample == 4 and spec.y_downsample == 4
    assert render_spec(spec) == "C,Mp(2x2),C,Mp(2x2),LSTM(200)"
    assert render_spec(spec, explicit_filters=True) == "C(64),Mp(2x2),C(128),Mp(2x2),LSTM(200)"


def test_one_by_two_pool_halves_height_only():
    spec = parse_spec("C,Mp(1x2),LSTM(10)")
    assert spec.layers[1] == MaxPool(kh=2, kw=1)
    assert spec.timesteps(100) == 100
    assert spec.feature_height(48) == 24


def test_render_canonical_example():
    spec = NetworkSpec((Conv(64), MaxPool(2, 2), LSTM(200)))
    assert render_spec(spec) == "C,Mp(2x2),LSTM(200)"


def test_filter_sequence_and_explicit_counts():
    spec = parse_spec("c, mp(2x2), C(7), C, lstm(5)", filters=[8, 16])
    assert spec.layers == (Conv(8), MaxPool(2, 2), Conv(7), Conv(16), LSTM(5))
    assert render_spec(spec) == "C(8),Mp(2x2),C(7),C(16),LSTM(5)"


@pytest.mark.parametrize(
    "text, position",
    [
        ("Mp(2x)", 1),
        ("C,Mp(3x2),LSTM(4)", 2),
        ("C,Foo,LSTM(4)", 2),
        ("C,LSTM(4.5)", 2),
        ("C,LSTM((4)", 2),
        ("LSTM(4),C", 2),
        ("LSTM(4),Mp(2x2)", 2),
        ("C,,LSTM(3)", 2),
        ("C(0)", 1),
    ],
)
def test_parse_errors_name_token_and_position(text, position):
    with pytest.raises(SpecError) as err:
        parse_spec(text)
    assert err.value.position == position
    assert err.value.token == [t.strip() for t in text.split(",")][position - 1]
    assert f"token {position}" in str(err.value)


def test_empty_spec_rejected():
    with pytest.raises(SpecError):
        parse_spec("  ")
    with pytest.raises(SpecError):
        render_spec(NetworkSpec(()))


def test_bare_conv_without_filter_count():
    with pytest.raises(SpecError):
        parse_spec("C,C", filters=[8])


layer_st = st.one_of(
    st.builds(Conv, st.integers(1, 512)),
    st.builds(MaxPool, st.sampled_from([1, 2]), st.sampled_from([1, 2])),
)
spec_st = st.builds(
    lambda cnn, rnn: NetworkSpec(tuple(cnn) + tuple(rnn)),
    st.lists(layer_st, max_size=8),
    st.lists(st.builds(LSTM, st.integers(1, 512)), max_size=3),
).filter(lambda s: len(s.layers) > 0)


@settings(max_examples=1000, deadline=None)
@given(spec_st, st.booleans())
def test_parse_render_roundtrip(spec, explicit):
    text = render_spec(spec, explicit_filters=explicit)
    assert parse_spec(text) == spec
    assert render_spec(parse_spec(text), explicit) == text


def test_width_rule_forty_characters():
    spec = parse_spec("C,Mp(2x2),C,Mp(2x2),LSTM(200)")
    check = min_width_check(spec, list(range(1, 41)), 320)
    assert check.heuristic_timesteps == 80
    assert check.heuristic_min_width(spec) == 320
    assert check.feasible


def test_required_timesteps_examples():
    assert required_timesteps([1, 2]) == 2
    assert required_timesteps([1, 1]) == 3
    spec = parse_spec("C,Mp(2x2),LSTM(4)")
    assert not min_width_check(spec, [1, 1], 5).feasible  # 2 timesteps
    assert min_width_check(spec, [1, 1], 6).feasible


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=20))
def test_required_bounded_by_heuristic(labels):
    req = required_timesteps(labels)
    assert len(labels) <= req <= 2 * len(labels)
    # the exact bound hits 2n-1 (one short of the safe rule) iff all neighbours repeat
    all_dup = all(a == b for a, b in zip(labels, labels[1:]))
    assert (req == 2 * len(labels) - 1) == all_dup
    assert req < 2 * len(labels)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["C", "Mp(2x2)", "Mp(1x2)", "Mp(2x1)"]), max_size=4), st.integers(16, 60))
def test_timesteps_match_network_output(cnn, width):
    spec = parse_spec(",".join(["C(2)"] + cnn + ["LSTM(3)"]), filters=[2, 2, 2, 2])
    model = init_model(spec, build_codec(["ab"]), seed=0, dtype=np.float64)
    res = network_forward_batch(model, [np.zeros((48, width))])
    assert res.logits.shape[1] == res.lengths[0] == spec.timesteps(width)
